#include "okakit/cli/cli.hpp"

int main(int argc, char** argv) { return okakit::cli::main(argc, argv); }
