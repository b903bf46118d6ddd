#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "kbonacci/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> cap_env;
    if (const char* raw = std::getenv(kbonacci::cli::kCapEnvVar)) {
        cap_env = raw;
    }
    return kbonacci::cli::run(args, std::cout, std::cerr, cap_env);
}
