#include "asailab/cli.hpp"

int main(int argc, char** argv) { return asailab::cli::run(argc, argv); }
