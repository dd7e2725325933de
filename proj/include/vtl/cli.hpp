#ifndef VTL_CLI_HPP
#define VTL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace vtl {

/// Entry point behind the `vtl` binary. Exit codes: 0 success, 1 failed
/// identity or pipeline disagreement, 2 usage or parse error, 3 guard
/// violation (crossing cap, enumeration cap, non-divisible normalization).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace vtl

#endif
