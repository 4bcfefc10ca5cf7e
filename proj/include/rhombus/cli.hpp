#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rhombus {

/// Exit codes: 0 success, 1 computation failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace rhombus
