#include <vector>
#include <string>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return flatsurf::cli::run(args);
}
