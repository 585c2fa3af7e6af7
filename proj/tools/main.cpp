#include "bjorth/cli.hpp"

int main(int argc, char** argv) { return bjorth::cli::run(argc, argv); }
