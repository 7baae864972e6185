#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domset {

/// Exit codes: 0 found/ok, 1 not found / failed check, 2 usage or input
/// error, 3 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace domset
