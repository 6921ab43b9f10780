#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "asailab/arith.hpp"
#include "asailab/coeff.hpp"

namespace asailab::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kHypothesis = 2, kUsage = 64 };

// Runs one invocation; args excludes the program name. The JSON report goes
// to `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

// Malformed flag values.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "p/q", "a+bi", "(a+bi)/q"; parts rational.
std::pair<Q, Q> parse_complex_rational(const std::string& s);
cplx parse_complex(const std::string& s);
// "p/q", "a+b*sqrt(e)", "b*sqrt(e)"
Coeff parse_coeff(const std::string& s);

// ASAILAB_PRECISION, falling back to 20.
int default_precision();

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

std::vector<Criterion> run_acceptance();
std::string format_criterion(const Criterion& c);

}  // namespace asailab::cli
