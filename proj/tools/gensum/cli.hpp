#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gensum::cli {

enum ExitCode : int { ok = 0, usage_or_domain_error = 1, not_converged = 2 };

/// Runs one invocation. `args` excludes the program name. Records go to
/// `out`, diagnostics and errors to `err`. The default output format comes
/// from GENSUM_FORMAT (text or structured) when set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace gensum::cli
