#pragma once

#include <vector>

#include "args.hpp"

namespace asailab::cli {

struct Command {
  const char* name;
  const char* help;
  void (*declare)(Args&);
  json (*exec)(const Args&, Report&);
};

const std::vector<Command>& commands();

}  // namespace asailab::cli
