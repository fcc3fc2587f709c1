#include <cstdio>
#include <string>
#include <vector>

#include "cremona/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cremona::cli::RunResult r = cremona::cli::run(args);
    std::fputs(r.out.c_str(), stdout);
    std::fputs(r.err.c_str(), stderr);
    return r.code;
}
