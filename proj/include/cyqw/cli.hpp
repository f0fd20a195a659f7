#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cyqw/pathalg.hpp"

namespace cyqw {

std::string emit_dot(const Quiver& q);

// Exit codes: 0 success, 1 check failure or refusal, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyqw
