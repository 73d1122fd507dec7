#include "scarf/cli.hpp"

int main(int argc, char** argv) { return scarf::cli::run_main(argc, argv); }
