#include <arithid/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return arithid::run_cli(argc, argv, std::cout, std::cerr); }
