#include "revwit/cli.hpp"

int main(int argc, char** argv) { return revwit::run_cli(argc, argv); }
