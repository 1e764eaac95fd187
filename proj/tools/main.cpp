#include "tnpm/cli.hpp"

int main(int argc, char** argv) { return tnpm::run_cli(argc, argv); }
