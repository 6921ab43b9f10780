#pragma once

#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "asailab/cli.hpp"
#include "json.hpp"

namespace asailab::cli {

using json = nlohmann::ordered_json;

// String-valued flags of one subcommand, parsed on demand so that numeric
// syntax errors surface as UsageError.
class Args {
 public:
  explicit Args(CLI::App* app) : app_(app) {}

  Args& opt(const std::string& name, const std::string& desc, const char* def = nullptr, const std::string& alias = "");
  Args& flag(const std::string& name, const std::string& desc);

  bool given(const std::string& name) const;
  bool set(const std::string& name) const { return flags_.at(name); }
  const std::string& raw(const std::string& name) const;

  std::int64_t i64(const std::string& name) const;
  int i32(const std::string& name) const;
  Q rat(const std::string& name) const;
  cplx complex(const std::string& name) const;
  Coeff coeff(const std::string& name) const;
  long double real(const std::string& name) const;
  std::vector<Coeff> coeff_list(const std::string& name) const;
  std::vector<int> int_list(const std::string& name) const;

  json inputs() const;

 private:
  CLI::App* app_;
  std::vector<std::string> order_, flag_order_;
  std::map<std::string, std::string> vals_, defaults_;
  std::map<std::string, CLI::Option*> opts_;
  std::map<std::string, bool> flags_;
};

struct Report {
  int precision = 20;
  json cutoffs = json::object();
  int exit = kOk;
};

// JSON helpers
json num(long double x);
json num(cplx z);
json exact(const Coeff& c);
json poly_json(const std::vector<Coeff>& p);

}  // namespace asailab::cli
