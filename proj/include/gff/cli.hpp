#ifndef GFF_CLI_HPP
#define GFF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gff::cli {

// Runs one subcommand. args excludes the program name. Exit convention:
// 0 = success / verification passed, 1 = verified failure (bessel_only where
// a frame is required, failed checks), 2 = input error (parse, dimension,
// bad parameters, I/O).
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace gff::cli

#endif  // GFF_CLI_HPP
