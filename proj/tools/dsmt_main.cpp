#include "dsmt/cli.hpp"

int main(int argc, char** argv) { return dsmt::cli::run(argc, argv); }
