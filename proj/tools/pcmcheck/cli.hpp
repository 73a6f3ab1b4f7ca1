#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcm::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

/// Runs one pcmcheck invocation. `args` excludes the program name. A file
/// argument of the form "catalog:<name>" loads a catalog entry instead of a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcm::cli
