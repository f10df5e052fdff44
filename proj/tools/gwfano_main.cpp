#include <iostream>

#include "gwfano/cli.hpp"

int main(int argc, char** argv) { return gwfano::run_cli(argc, argv, std::cout, std::cerr); }
