#include "cuspk/cli.hpp"

int main(int argc, char** argv) { return cuspk::cli_main(argc, argv); }
