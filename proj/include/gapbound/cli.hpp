#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gapbound {

/// Exit codes: 0 all checks pass, 1 usage or parse error, 2 precondition
/// rejection, 3 internal verification failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gapbound
