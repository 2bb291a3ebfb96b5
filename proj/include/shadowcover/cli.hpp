#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shadowcover {

// Exit codes: 0 affirmative verdict or clean run, 1 negative verdict,
// 2 usage or input error.
enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitInput = 2 };

// Entry point of the shadowcover tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shadowcover
