#ifndef QDEFORM_CLI_HPP
#define QDEFORM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qdeform {

// Command-line front end.  `args` excludes the program name.  Returns 0 on
// success, 2 on parse/usage errors, 3 on domain errors, 1 on anything
// unexpected.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qdeform

#endif
