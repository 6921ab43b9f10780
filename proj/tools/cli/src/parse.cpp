#include <cctype>
#include <cstdlib>
#include <string>

#include "asailab/cli.hpp"

namespace asailab::cli {

namespace {

std::string strip(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r.push_back(c);
  return r;
}

// Rational, also accepting a terminating decimal such as 0.25.
Q real_part(const std::string& s, const std::string& whole) {
  try {
    auto dot = s.find('.');
    if (dot == std::string::npos || s.find('/') != std::string::npos) return parse_rational(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("empty");
    Q q = parse_rational(digits);
    q /= qpow(Q(10), static_cast<int>(s.size() - dot - 1));
    return q;
  } catch (const std::exception&) {
    throw UsageError("malformed number '" + whole + "'");
  }
}

}  // namespace

std::pair<Q, Q> parse_complex_rational(const std::string& raw) {
  std::string s = strip(raw);
  if (s.empty()) throw UsageError("empty number");
  if (s.front() == '(') {
    auto close = s.find(')');
    if (close == std::string::npos) throw UsageError("malformed number '" + raw + "'");
    auto inner = parse_complex_rational(s.substr(1, close - 1));
    std::string rest = s.substr(close + 1);
    if (rest.empty()) return inner;
    if (rest[0] != '/') throw UsageError("malformed number '" + raw + "'");
    Q den = real_part(rest.substr(1), raw);
    if (den == 0) throw UsageError("zero denominator in '" + raw + "'");
    return {inner.first / den, inner.second / den};
  }
  Q re = 0, im = 0;
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    std::size_t next = pos + 1;
    while (next < s.size() && s[next] != '+' && s[next] != '-') ++next;
    std::string term = s.substr(pos, next - pos);
    pos = next;
    if (term == "+" || term == "-") throw UsageError("malformed number '" + raw + "'");
    if (term.back() == 'i') {
      term.pop_back();
      if (!term.empty() && term.back() == '*') term.pop_back();
      if (term.empty() || term == "+") im += 1;
      else if (term == "-") im -= 1;
      else im += real_part(term, raw);
    } else {
      re += real_part(term, raw);
    }
    any = true;
  }
  if (!any) throw UsageError("malformed number '" + raw + "'");
  return {re, im};
}

cplx parse_complex(const std::string& s) {
  auto [re, im] = parse_complex_rational(s);
  return {to_long_double(re), to_long_double(im)};
}

Coeff parse_coeff(const std::string& raw) {
  std::string s = strip(raw);
  auto at = s.find("sqrt(");
  if (at == std::string::npos) return Coeff(real_part(s, raw));
  auto close = s.find(')', at);
  if (close == std::string::npos || close + 1 != s.size()) throw UsageError("malformed coefficient '" + raw + "'");
  std::int64_t e;
  try {
    e = std::stoll(s.substr(at + 5, close - at - 5));
  } catch (const std::exception&) {
    throw UsageError("malformed coefficient '" + raw + "'");
  }
  if (e == 0 || e == 1 || !is_squarefree(e)) throw UsageError("sqrt argument must be squarefree and != 0, 1");
  std::string head = s.substr(0, at);
  if (!head.empty() && head.back() == '*') head.pop_back();
  // head is "[a(+|-)]b" with b possibly empty or a bare sign
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;)
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  std::string a = split == std::string::npos ? "" : head.substr(0, split);
  std::string b = split == std::string::npos ? head : head.substr(split);
  Q qb;
  if (b.empty() || b == "+") qb = 1;
  else if (b == "-") qb = -1;
  else qb = real_part(b, raw);
  Q qa = a.empty() ? Q(0) : real_part(a, raw);
  return Coeff(qa, qb, e);
}

int default_precision() {
  const char* env = std::getenv("ASAILAB_PRECISION");
  if (env == nullptr || *env == '\0') return 20;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 10000) throw UsageError(std::string("ASAILAB_PRECISION must be a positive integer, got '") + env + "'");
  return static_cast<int>(v);
}

}  // namespace asailab::cli
