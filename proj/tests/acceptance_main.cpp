#include <iostream>
#include <sstream>

#include "singmod/acceptance.hpp"
#include "singmod/cli.hpp"

int main(int argc, char** argv) {
  singmod::AcceptanceOptions opts;
  opts.prec = 8;
  if (argc > 1) opts.prec = std::stoi(argv[1]);
  opts.tower = [](int p) { return singmod::cached_tower(p); };
  opts.cli = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    return singmod::run_cli(args, out, err);
  };
  int failed = 0;
  for (const auto& r : singmod::run_acceptance(opts)) {
    std::cout << singmod::format_criterion(r) << std::endl;
    failed += r.pass ? 0 : 1;
  }
  std::cout << (9 - failed) << "/9 criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
