#ifndef bireal_tools_cli_hpp
#define bireal_tools_cli_hpp

#include <ostream>
#include <string>
#include <vector>

namespace bireal::cli {

enum ExitCode : int {
    kRealizable = 0,
    kNotRealizable = 1,
    kInputError = 2,
    kVerificationFailed = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}

#endif /* bireal_tools_cli_hpp */
