#include "gkmlab/rational.hpp"

#include <algorithm>
#include <cctype>

#include "gkmlab/error.hpp"

namespace gkm {

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_display(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw InputError("not a rational literal: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer p(n, 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ContextMismatch("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vec scaled(const Vec& v, const Rational& s) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ContextMismatch("add: dimension mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ContextMismatch("sub: dimension mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool parallel(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ContextMismatch("parallel: dimension mismatch");
  // All 2x2 minors vanish.
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

Vec normalized_first_one(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return scaled(v, 1 / x);
  throw PreconditionError("cannot normalize the zero vector");
}

Vec primitive(const Vec& v) {
  Integer lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& x : v) {
    Rational y = x * lcm_den;
    ints.push_back(y.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_num().get_mpz_t());
  }
  if (g == 0) throw PreconditionError("primitive: zero vector");
  int sign = 0;
  for (const auto& z : ints)
    if (sgn(z) != 0) {
      sign = sgn(z);
      break;
    }
  Vec out;
  out.reserve(v.size());
  for (const auto& z : ints) out.emplace_back(Rational(z * sign / g));
  return out;
}

bool VecLess::operator()(const Vec& a, const Vec& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_display(v[i]);
  }
  return s + ")";
}

Vec parse_vec(std::string_view csv) {
  Vec out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto comma = csv.find(',', start);
    auto piece = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace gkm
