#include <vector>

#include "twophase/cli.hpp"

int main(int argc, char** argv) {
    return twophase::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc));
}
