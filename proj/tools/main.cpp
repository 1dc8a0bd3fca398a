#include "liqshock/cli.hpp"

int main(int argc, char** argv) { return liqshock::run_cli(argc, argv); }
