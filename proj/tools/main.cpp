#include <iostream>
#include <string>
#include <vector>

#include "acgb/driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return acgb::run(args, std::cout, std::cerr);
}
