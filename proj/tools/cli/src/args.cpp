#include "args.hpp"

#include <cmath>
#include <sstream>

#include "asailab/poly.hpp"

namespace asailab::cli {

Args& Args::opt(const std::string& name, const std::string& desc, const char* def, const std::string& alias) {
  std::string names = "--" + name + (alias.empty() ? "" : ",--" + alias);
  std::string help = desc;
  if (def) {
    defaults_[name] = def;
    help += " (default " + std::string(def) + ")";
  }
  opts_[name] = app_->add_option(names, vals_[name], help);
  order_.push_back(name);
  return *this;
}

Args& Args::flag(const std::string& name, const std::string& desc) {
  flags_[name] = false;
  app_->add_flag("--" + name, flags_[name], desc);
  flag_order_.push_back(name);
  return *this;
}

bool Args::given(const std::string& name) const { return opts_.at(name)->count() > 0; }

const std::string& Args::raw(const std::string& name) const {
  if (given(name)) return vals_.at(name);
  auto it = defaults_.find(name);
  if (it != defaults_.end()) return it->second;
  throw UsageError("missing required flag --" + name);
}

std::int64_t Args::i64(const std::string& name) const {
  Q q = rat(name);
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw UsageError("--" + name + " must be an integer");
  return q.get_num().get_si();
}

int Args::i32(const std::string& name) const {
  std::int64_t v = i64(name);
  if (v < -1000000000 || v > 1000000000) throw UsageError("--" + name + " out of range");
  return static_cast<int>(v);
}

Q Args::rat(const std::string& name) const {
  auto [re, im] = parse_complex_rational(raw(name));
  if (im != 0) throw UsageError("--" + name + " must be rational");
  return re;
}

cplx Args::complex(const std::string& name) const { return parse_complex(raw(name)); }

Coeff Args::coeff(const std::string& name) const { return parse_coeff(raw(name)); }

long double Args::real(const std::string& name) const {
  const std::string& s = raw(name);
  if (s.find_first_of("eE") != std::string::npos) {
    char* end = nullptr;
    long double v = std::strtold(s.c_str(), &end);
    if (*end != '\0' || !std::isfinite(v)) throw UsageError("malformed number '" + s + "'");
    return v;
  }
  return to_long_double(rat(name));
}

namespace {
std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}
}  // namespace

std::vector<Coeff> Args::coeff_list(const std::string& name) const {
  std::vector<Coeff> out;
  for (auto& item : split_commas(raw(name))) out.push_back(parse_coeff(item));
  if (out.empty()) throw UsageError("--" + name + " is empty");
  return out;
}

std::vector<int> Args::int_list(const std::string& name) const {
  std::vector<int> out;
  for (auto& item : split_commas(raw(name))) {
    Q q = parse_complex_rational(item).first;
    if (q.get_den() != 1 || !q.get_num().fits_sint_p()) throw UsageError("--" + name + " must be a list of integers");
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

json Args::inputs() const {
  json j = json::object();
  for (auto& name : order_) {
    if (given(name)) j[name] = vals_.at(name);
    else if (defaults_.count(name)) j[name] = defaults_.at(name);
  }
  for (auto& name : flag_order_)
    if (flags_.at(name)) j[name] = true;
  return j;
}

json num(long double x) { return static_cast<double>(x); }

json num(cplx z) { return json::array({static_cast<double>(z.real()), static_cast<double>(z.imag())}); }

json exact(const Coeff& c) { return c.str(); }

json poly_json(const std::vector<Coeff>& p) {
  json arr = json::array();
  for (auto& c : p) arr.push_back(c.str());
  return arr;
}

}  // namespace asailab::cli
