// Command-line front end; subcommands are implemented in cli_commands.cpp
// and dispatched here.
#include "cli_commands.hpp"

int main(int argc, char** argv) { return satgame::cli::run(argc, argv); }
