#include "strel/cli.hpp"

int main(int argc, char** argv) { return strel::cli::run(argc, argv); }
