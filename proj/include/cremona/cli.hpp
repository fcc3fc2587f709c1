#pragma once

#include <string>
#include <vector>

namespace cremona {
namespace cli {

// Exit codes: 0 affirmative/success, 1 negative verdict, 2 usage or parse
// error, 3 inconclusive (nilpotency cap exhausted).
struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args);

}  // namespace cli
}  // namespace cremona
