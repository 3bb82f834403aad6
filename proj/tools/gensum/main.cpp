#include "gensum/cli.hpp"

int main(int argc, char** argv) { return gensum::cli::run(argc, argv); }
