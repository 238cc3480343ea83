#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace mwz::cli {

// Exit codes: 0 success/pass, 1 usage or malformed input, 2 domain violation
// (inadmissible parameters, poles, budget caps), 3 divergence, 4 a
// verification or certification that ran and failed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mwz::cli
