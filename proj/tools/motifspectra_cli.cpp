#include "motifspectra/experiments/cli.hpp"

int main(int argc, char** argv) { return motifspectra::experiments::cli_main(argc, argv); }
