#include "svoa/cli.hpp"

int main(int argc, char** argv) { return svoa::cli::run(argc, argv); }
