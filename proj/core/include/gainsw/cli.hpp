#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gainsw {
namespace cli {

// Exit codes: 0 affirmative/success, 1 negative verdict,
// 2 usage/parse error, 3 unsupported feature.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace gainsw
