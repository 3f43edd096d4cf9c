#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bhepn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

/// Dispatches `build`, `sweep`, `enumerate`, `jordan`, `verify`. Returns the
/// process exit code: 0 on success, 1 on validation errors, 2 on
/// numerical-verification failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bhepn::cli
