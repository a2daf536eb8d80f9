#ifndef DSMT_CLI_HPP
#define DSMT_CLI_HPP

#include <string>
#include <vector>

namespace dsmt::cli {

/// Runs the command-line front end. Exit codes: 0 success, 1 semantic
/// failure (invalid input function/stratification), 2 parse/I-O failure,
/// 3 size bound exceeded.
int run(const std::vector<std::string>& args);

int run(int argc, char** argv);

} // namespace dsmt::cli

#endif
