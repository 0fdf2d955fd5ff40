#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert {

// Runs one CLI request.  Returns 0 on success, 2 on usage errors, 3 when a
// resource cap is exceeded, 1 on internal errors.  Identical inputs yield
// byte-identical output.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace schubert
