#pragma once

#include "apv/ballot.hpp"
#include "apv/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace apv::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kDegenerate = 3 };

inline const std::vector<std::string> kMethods{"prac", "path-top", "approval", "swiss", "bucklin"};

/// Report for one method. `with_matrices` embeds the Llull and path tables
/// (relative ones when `relative`). Throws DegenerateInput when the profile
/// is empty or has no option besides `0`.
TallyReport tally(const Profile& profile, Interp interp, const std::string& method, bool with_matrices = false,
                  bool relative = false);

/// Entry point behind the `apv` binary; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apv::cli
