#include <iostream>
#include <string>
#include <vector>

#include "trie_runs/workbench.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return trie_runs::workbench::run_cli(args, std::cout, std::cerr);
}
