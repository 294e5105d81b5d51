#include "ghzsim/cli.hpp"

int main(int argc, char** argv) {
    return ghzsim::cli_main(argc, argv);
}
