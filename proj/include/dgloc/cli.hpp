// Command-line front end.
//
//   dgloc validate         --space S [--basepoint V]
//   dgloc spaces
//   dgloc tangent          --space S --connection C [--r R] [--basepoint V] [--prequotient] [--bases]
//   dgloc resolution-check --n N --r R [--seed K] [--samples M]
//   dgloc bracket          --space S --connection C [--r R] [--basepoint V]
//   dgloc invariance       --space S --connection C --other-space S2 --other-connection C2 [--r R]
//   dgloc suite            [--seed K] [--criterion I]
//
// Every verb accepts --format human|json. S is a built-in name (torus,
// sphere, simplex:N, boundary:N, circle:K, wedge:G) or a space file; C is
// `trivial` (needs --r) or a connection file.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 invariant violation,
// 3 non-flat connection.

#ifndef DGLOC_CLI_HPP
#define DGLOC_CLI_HPP

#include "dgloc/scomplex.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dgloc {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInvariant = 2, kExitNonFlat = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct BuiltinSpace {
    std::string name;  // as accepted by --space
    std::string description;
};

std::vector<BuiltinSpace> builtin_spaces();
/// Resolves a built-in name or loads a file. Throws ParseError for files and
/// std::invalid_argument for a malformed built-in name.
SemiSimplicialSet resolve_space(const std::string& spec);

}  // namespace dgloc

#endif  // DGLOC_CLI_HPP
