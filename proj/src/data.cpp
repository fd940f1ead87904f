#include "lorentz/data.hpp"

#include <cstdlib>

#ifndef LORENTZ_DATA_DIR
#define LORENTZ_DATA_DIR "data"
#endif

namespace lorentz {

std::string data_dir() {
  if (const char* env = std::getenv("LORENTZ_DATA_DIR"); env && *env) return env;
  return LORENTZ_DATA_DIR;
}

std::string data_path(const std::string& name) { return data_dir() + "/" + name; }

}  // namespace lorentz
