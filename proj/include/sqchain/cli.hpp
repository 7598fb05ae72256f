#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sqchain::cli {

/// Dispatch one invocation (argv without the program name).
/// Exit code 0 on success, 1 on domain failure, 2 on usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sqchain::cli
