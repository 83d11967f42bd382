#pragma once

#include <optional>
#include <string>
#include <vector>

namespace helmscat::cli {

// Shipped experiment configs reproducing the reference tables and
// figure data.  Names are table1..table5 and fig2..fig5.
std::vector<std::string> bundled_names();
std::optional<std::string> bundled_config(const std::string& name);

} // namespace helmscat::cli
