#include "cgkit/cli.hpp"

int main(int argc, char** argv) {
    return cgkit::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
