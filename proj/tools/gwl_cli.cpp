#include "gwl/cli.hpp"

int main(int argc, char** argv) { return gwl::cli::run(argc, argv); }
