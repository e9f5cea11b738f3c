#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace waring {

// Front end for all subcommands (trace-power, set, subgroup, decide, verify,
// order, certify, identity, universe). Exit codes: 0 success/agreement,
// 1 theorem disagreement or failed certification, 2 usage or budget errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace waring
