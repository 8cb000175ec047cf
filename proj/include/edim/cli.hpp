#ifndef EDIM_CLI_HPP
#define EDIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace edim::cli {

enum ExitCode : int { Ok = 0, ChecksFailed = 1, ParseFailure = 2, DomainFailure = 3 };

// args excludes the program name. File arguments may be "-" for `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace edim::cli

#endif
