#include "singmod/cli.hpp"

int main(int argc, char** argv) { return singmod::run_cli(argc, argv); }
