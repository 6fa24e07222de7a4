#include "epglab/cli.hpp"

int main(int argc, char** argv) { return epglab::run_cli(argc, argv); }
