#include "sstk/cli.hpp"

int main(int argc, char** argv) { return sstk::cli_main(argc, argv); }
