#include <iostream>
#include <string>
#include <vector>

#include "singlink/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return singlink::run_cli(args, std::cout, std::cerr);
}
