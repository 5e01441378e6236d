#ifndef TCFKIT_CLI_HPP
#define TCFKIT_CLI_HPP

namespace tcfkit::cli {

/**
 * Entry point of the tcfkit command line tool.  Exit codes: 0 success,
 * 2 clean negative answer (the point is not a member), 3 budget
 * exceeded, 4 input or usage error.
 */
int run(int argc, char** argv);

}  // namespace tcfkit::cli

#endif  // TCFKIT_CLI_HPP
