#include "mpbt/cli.hpp"

int main(int argc, char** argv) {
    return mpbt::cli::run(argc, argv);
}
