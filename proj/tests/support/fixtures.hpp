#pragma once

#include <string>

#include "topotutte/polynomial.hpp"
#include "topotutte/rgfile.hpp"

namespace topotutte::testing {

inline std::string data_path(const std::string& name) { return std::string(TOPOTUTTE_DATA_DIR) + "/" + name; }

inline RibbonGraph load(const std::string& name) { return read_rg_file(data_path(name)); }

inline Poly P(const std::string& text) { return Poly::parse(text); }

}  // namespace topotutte::testing
