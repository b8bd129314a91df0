#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "test_config.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace testcfg {
unsigned long long seed = 20260816ull;
} // namespace testcfg

int main(int argc, char** argv) {
    std::vector<char*> args;
    for (int i = 0; i < argc; ++i) {
        const std::string a = argv[i];
        if (a.rfind("--seed=", 0) == 0) {
            testcfg::seed = std::strtoull(a.c_str() + 7, nullptr, 10);
            continue;
        }
        if (a == "--seed" && i + 1 < argc) {
            testcfg::seed = std::strtoull(argv[++i], nullptr, 10);
            continue;
        }
        args.push_back(argv[i]);
    }
    std::printf("seed %llu\n", testcfg::seed);

    doctest::Context ctx;
    ctx.applyCommandLine(static_cast<int>(args.size()), args.data());
    return ctx.run();
}
