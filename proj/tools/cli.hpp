#pragma once

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace icecrystal::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2, kCapExceeded = 3 };

/// `args` excludes the program name. `env_node_cap` is the value of
/// ICE_CRYSTAL_NODE_CAP, or empty when unset.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& env_node_cap = {});

}  // namespace icecrystal::cli
