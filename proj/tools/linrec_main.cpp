#include <cstdio>

#include "linrec/cli.hpp"

int main(int argc, char** argv) { return linrec::cli_main(argc, argv); }
