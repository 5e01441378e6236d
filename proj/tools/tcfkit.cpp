#include "tcfkit/cli.hpp"

int main(int argc, char** argv) { return tcfkit::cli::run(argc, argv); }
