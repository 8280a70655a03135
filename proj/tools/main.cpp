#include "cli.hpp"

int main(int argc, char **argv) { return arithlab::cli::run(argc, argv, std::cout, std::cerr); }
