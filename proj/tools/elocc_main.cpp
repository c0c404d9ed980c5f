#include "elocc/cli.hpp"

int main(int argc, char** argv) { return elocc::cli::run_cli(argc, argv); }
