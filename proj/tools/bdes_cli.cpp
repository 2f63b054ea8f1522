#include "bdes/cli.hpp"

int main(int argc, char** argv) { return bdes::cli::run(argc, argv); }
