#include <vector>
#include <string>

#include "ttmol/cli.hpp"

int main(int argc, char** argv) {
    return ttmol::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
