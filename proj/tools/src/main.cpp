#include "fqg_cli/cli.hpp"

int main(int argc, char** argv) { return fqg::cli::main(argc, argv); }
