#include "movoid/cli.hpp"

int main(int argc, char** argv) { return movoid::cli_run(argc, argv); }
