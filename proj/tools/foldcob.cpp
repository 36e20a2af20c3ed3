#include "foldcob/cli.hpp"

int main(int argc, char** argv) { return foldcob::run_command(argc, argv); }
