//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

// The knotgrowth command line front end, callable in process so that tests
// can capture its output and exit code.

#ifndef KNOTSEMI_TOOLS_CLI_HPP_
#define KNOTSEMI_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace knotsemi::cli {

  enum ExitCode : int {
    ok             = 0,
    not_verified   = 1,
    argument_error = 2,
    budget_error   = 3,
    internal_error = 4
  };

  //! Runs one command; args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace knotsemi::cli

#endif  // KNOTSEMI_TOOLS_CLI_HPP_
