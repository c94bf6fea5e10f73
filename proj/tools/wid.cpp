#include "wid_cli.hpp"

int main(int argc, char** argv) { return wid::cli::run(argc, argv, std::cout, std::cerr); }
