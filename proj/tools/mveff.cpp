#include <iostream>

#include "mveff/app/commands.hpp"

int main(int argc, char** argv) {
  return mveff::app::run_cli(argc, argv, std::cout, std::cerr);
}
