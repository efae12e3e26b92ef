#include "ussr/cli.hpp"

int main(int argc, char** argv) { return ussr::cli::run(argc, argv); }
