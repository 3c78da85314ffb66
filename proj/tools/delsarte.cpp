#include "delsarte/cli/dispatch.hpp"

#include <iostream>

int main(int argc, char** argv) { return delsarte::cli::dispatch(argc, argv, std::cout, std::cerr); }
