#ifndef CKC_TOOLS_CLI_HPP
#define CKC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ckc::cli {

// Exit codes: 0 success, 1 input or parse error, 2 verification failure,
// 3 geometric infeasibility.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ckc::cli

#endif // CKC_TOOLS_CLI_HPP
