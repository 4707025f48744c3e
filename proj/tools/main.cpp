#include "stabdiv/cli.hpp"

int main(int argc, char** argv) { return stabdiv::run_cli(argc, argv); }
