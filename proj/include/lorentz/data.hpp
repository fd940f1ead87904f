#pragma once

#include <string>

namespace lorentz {

/// Directory holding bundled data files. The LORENTZ_DATA_DIR environment
/// variable overrides the compiled-in default.
std::string data_dir();
std::string data_path(const std::string& name);

}  // namespace lorentz
