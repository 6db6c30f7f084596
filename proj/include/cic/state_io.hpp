#pragma once

#include <string>

#include "cic/states.hpp"

namespace cic::io {

// JSON schema: {"dim": d, "re": [[...]], "im": [[...]]}, row-major. "im" may
// be omitted for real matrices. Validation is applied on load.
DensityMatrix load_state_json(const std::string& path);
DensityMatrix parse_state_json(const std::string& text);

void save_state_json(const std::string& path, const DensityMatrix& rho);
std::string state_json(const DensityMatrix& rho);

}  // namespace cic::io
