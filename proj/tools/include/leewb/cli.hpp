#ifndef LEEWB_CLI_HPP_
#define LEEWB_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace leewb {

  namespace exit_code {
    inline constexpr int holds = 0;
    inline constexpr int fails = 1;
    inline constexpr int usage = 2;
  }  // namespace exit_code

  //! Runs the `lee` command line; args excludes the program name.
  int run_cli(std::vector<std::string> const& args, std::ostream& out,
              std::ostream& err);

}  // namespace leewb

#endif  // LEEWB_CLI_HPP_
