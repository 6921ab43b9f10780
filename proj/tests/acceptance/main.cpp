#include <iostream>

#include "asailab/cli.hpp"

int main() {
  int failed = 0;
  for (const auto& c : asailab::cli::run_acceptance()) {
    std::cout << asailab::cli::format_criterion(c) << "\n";
    if (!c.pass) ++failed;
  }
  std::cout << (failed ? "FAILED " : "ok ") << failed << " criteria failed\n";
  return failed ? 1 : 0;
}
