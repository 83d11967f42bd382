#include "helmscat/bundled.hpp"

#include <array>
#include <utility>

namespace helmscat::cli {

namespace {

constexpr const char* kTable1 = R"cfg(# Direct MRC residual study: four obstacles x {k, incident direction}.
experiment = direct-mrc
output = table1
order = 5
knots = 720
w_min = 1e-8
epsilon = 0

[case I-k1-ax]
shape = ellipse
a = 2.0
b = 1.0
poles = 4
pole_scale = 0.7
k = 1.0
alpha = 0.0
reference = 0.000201

[case I-k1-ay]
shape = ellipse
a = 2.0
b = 1.0
poles = 4
pole_scale = 0.7
k = 1.0
alpha = 1.5707963267948966
reference = 0.000357

[case I-k5-ax]
shape = ellipse
a = 2.0
b = 1.0
poles = 4
pole_scale = 0.7
k = 5.0
alpha = 0.0
reference = 0.001309

[case I-k5-ay]
shape = ellipse
a = 2.0
b = 1.0
poles = 4
pole_scale = 0.7
k = 5.0
alpha = 1.5707963267948966
reference = 0.007228

[case II-k1-ax]
shape = kite
cx = -0.65
cy = 0.0
poles = 16
pole_scale = 0.9
k = 1.0
alpha = 0.0
reference = 0.003555

[case II-k1-ay]
shape = kite
cx = -0.65
cy = 0.0
poles = 16
pole_scale = 0.9
k = 1.0
alpha = 1.5707963267948966
reference = 0.002169

[case II-k5-ax]
shape = kite
cx = -0.65
cy = 0.0
poles = 16
pole_scale = 0.9
k = 5.0
alpha = 0.0
reference = 0.009673

[case II-k5-ay]
shape = kite
cx = -0.65
cy = 0.0
poles = 16
pole_scale = 0.9
k = 5.0
alpha = 1.5707963267948966
reference = 0.007291

[case III-k1-ax]
shape = triangle
poles = 16
pole_scale = 0.9
k = 1.0
alpha = 0.0
reference = 0.008281

[case III-k1-ay]
shape = triangle
poles = 16
pole_scale = 0.9
k = 1.0
alpha = 1.5707963267948966
reference = 0.007523

[case III-k5-ax]
shape = triangle
poles = 16
pole_scale = 0.9
k = 5.0
alpha = 0.0
reference = 0.021571

[case III-k5-ay]
shape = triangle
poles = 16
pole_scale = 0.9
k = 5.0
alpha = 1.5707963267948966
reference = 0.024360

[case IV-k1-ax]
shape = ellipse
a = 0.1
b = 1.0
poles = 32
pole_scale = 0.95
k = 1.0
alpha = 0.0
reference = 0.006610

[case IV-k1-ay]
shape = ellipse
a = 0.1
b = 1.0
poles = 32
pole_scale = 0.95
k = 1.0
alpha = 1.5707963267948966
reference = 0.006785

[case IV-k5-ax]
shape = ellipse
a = 0.1
b = 1.0
poles = 32
pole_scale = 0.95
k = 5.0
alpha = 0.0
reference = 0.034027

[case IV-k5-ay]
shape = ellipse
a = 0.1
b = 1.0
poles = 32
pole_scale = 0.95
k = 5.0
alpha = 1.5707963267948966
reference = 0.040129
)cfg";

constexpr const char* kTable2 = R"cfg(# Periodic-structure MRC residuals: profiles I-IV x incidence angle.
experiment = grating-mrc
output = table2
k = 1.0
nodes = 256
poles = 64
w_min = 1e-8
b_depth = 1.2
jmax = 120
epsilon = 0

[case I-45]
profile = 1
theta = 0.7853981633974483
reference = 0.000424

[case I-60]
profile = 1
theta = 1.0471975511965976
reference = 0.000407

[case I-90]
profile = 1
theta = 1.5707963267948966
reference = 0.000371

[case II-45]
profile = 2
theta = 0.7853981633974483
reference = 0.001491

[case II-60]
profile = 2
theta = 1.0471975511965976
reference = 0.001815

[case II-90]
profile = 2
theta = 1.5707963267948966
reference = 0.002089

[case III-45]
profile = 3
theta = 0.7853981633974483
reference = 0.009623

[case III-60]
profile = 3
theta = 1.0471975511965976
reference = 0.011903

[case III-90]
profile = 3
theta = 1.5707963267948966
reference = 0.013828

[case IV-45]
profile = 4
theta = 0.7853981633974483
reference = 0.014398

[case IV-60]
profile = 4
theta = 1.0471975511965976
reference = 0.017648

[case IV-90]
profile = 4
theta = 1.5707963267948966
reference = 0.020451
)cfg";

constexpr const char* kTable3 = R"cfg(# Ratio of the Kirchhoff-approximate to the exact amplitude for the
# shifted circle, 13 (alpha', alpha) pairs representing l = (1,0).
experiment = inverse-sfm
mode = ratio-table
output = table3
cx = 6.0
cy = 2.0
radius = 1.0

[case k1]
k = 1.0

[case k5]
k = 5.0
)cfg";

constexpr const char* kTable4 = R"cfg(# Robin-circle support identification by phase regression, k = 3.
experiment = inverse-sfm
mode = robin
output = table4
cx = 0.0
cy = 0.0
radius = 1.0
k = 3.0
pairs = 64

[case h-0.01]
h = 0.01
reference = -0.9006

[case h-0.1]
h = 0.10
reference = -0.9191

[case h-0.5]
h = 0.50
reference = -1.0072

[case h-1]
h = 1.00
reference = -1.0730

[case h-2]
h = 2.00
reference = -0.9305

[case h-5]
h = 5.00
reference = -1.3479

[case h-10]
h = 10.00
reference = -1.1693

[case h-100]
h = 100.00
reference = -1.0801
)cfg";

constexpr const char* kTable5 = R"cfg(# Two radiating solutions with nearly identical far fields and wildly
# different boundary traces: single off-center pole fit to the exact
# unit-circle amplitude.
experiment = illposed-demo
output = table5
k = 1.0
order = 5
pole_x = 0.8
pole_y = 0.0
directions = 120
w_min = 1e-8
rows = 20
)cfg";

constexpr const char* kFig2 = R"cfg(# Support-function localization of the shifted circle.
experiment = inverse-sfm
mode = support
output = fig2
shape = circle
cx = 6.0
cy = 2.0
radius = 1.0
source = analytic
n_far = 128
directions = 16
grid_cx = 6.0
grid_cy = 2.0
grid_half = 2.5
grid_n = 101
reconstruct = true

[case k1]
k = 1.0

[case k5]
k = 5.0
)cfg";

constexpr const char* kFig3 = R"cfg(# Support-function reconstruction of the kite from synthetic MRC data.
experiment = inverse-sfm
mode = support
output = fig3
shape = kite
cx = 5.35
cy = 2.0
source = mrc
poles = 16
pole_scale = 0.9
order = 5
knots = 720
w_min = 1e-8
n_far = 120
directions = 40
reconstruct = true

[case k1]
k = 1.0
)cfg";

constexpr const char* kFig4 = R"cfg(# Linear sampling scan of the circle at (10, 15), k = 1.
experiment = inverse-lsm
output = fig4
cx = 10.0
cy = 15.0
radius = 1.0
source = analytic
n = 128
grid_cx = 10.0
grid_cy = 15.0
grid_half = 6.0
grid_n = 61

[case k1]
k = 1.0
)cfg";

constexpr const char* kFig5 = R"cfg(# Linear sampling scan of the circle at (10, 15), k = 5.
experiment = inverse-lsm
output = fig5
cx = 10.0
cy = 15.0
radius = 1.0
source = analytic
n = 128
grid_cx = 10.0
grid_cy = 15.0
grid_half = 6.0
grid_n = 61

[case k5]
k = 5.0
)cfg";

constexpr std::array<std::pair<const char*, const char*>, 9> kBundled = {{
    {"table1", kTable1},
    {"table2", kTable2},
    {"table3", kTable3},
    {"table4", kTable4},
    {"table5", kTable5},
    {"fig2", kFig2},
    {"fig3", kFig3},
    {"fig4", kFig4},
    {"fig5", kFig5},
}};

} // namespace

std::vector<std::string> bundled_names()
{
    std::vector<std::string> names;
    names.reserve(kBundled.size());
    for (const auto& [name, text] : kBundled) names.emplace_back(name);
    return names;
}

std::optional<std::string> bundled_config(const std::string& name)
{
    std::string key = name;
    if (key.size() > 4 && key.substr(key.size() - 4) == ".cfg") key.resize(key.size() - 4);
    for (const auto& [n, text] : kBundled)
        if (key == n) return std::string(text);
    return std::nullopt;
}

} // namespace helmscat::cli
