#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace germ::cli {

/// Exit status: 0 success, 1 invalid input, 2 inconclusive search.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace germ::cli
