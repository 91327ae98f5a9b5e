#include "gkmlab/polyring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gkmlab/error.hpp"

namespace gkm {

// ---------------------------------------------------------------- SpaceCtx

SpaceCtx::SpaceCtx(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InputError("space dimension must be at least 1");
  if (static_cast<int>(labels_.size()) > kMaxVars)
    throw InputError("space dimension exceeds the supported maximum of " + std::to_string(kMaxVars));
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw InputError("basis labels must be distinct");
}

SpaceCtx SpaceCtx::standard(int dim, const std::string& prefix) {
  std::vector<std::string> labels;
  for (int i = 1; i <= dim; ++i) labels.push_back(prefix + std::to_string(i));
  return SpaceCtx(std::move(labels));
}

SpaceCtx SpaceCtx::extended(const std::string& label) const {
  auto labels = labels_;
  labels.push_back(label);
  return SpaceCtx(std::move(labels));
}

// ---------------------------------------------------------------- Monomial

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = exp[i] + other.exp[i];
    if (e > 255) throw PreconditionError("monomial exponent overflow");
    m.exp[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return std::lexicographical_compare(b.exp.begin(), b.exp.end(), a.exp.begin(), a.exp.end());
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw PreconditionError("unsupported number of variables");
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw PreconditionError("variable index out of range");
  Monomial m;
  m.exp[index] = 1;
  return term(nvars, m, 1);
}

MultiPoly MultiPoly::linear(const Vec& l) {
  MultiPoly p(static_cast<int>(l.size()));
  for (std::size_t i = 0; i < l.size(); ++i) {
    Monomial m;
    m.exp[i] = 1;
    p.add_term(m, l[i]);
  }
  return p;
}

MultiPoly MultiPoly::term(int nvars, const Monomial& m, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Vec MultiPoly::linear_coefficients() const {
  Vec out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() != 1) throw PreconditionError("not a linear form");
    for (int i = 0; i < nvars_; ++i)
      if (m.exp[i]) out[i] = c;
  }
  return out;
}

bool MultiPoly::involves(int index) const {
  return std::any_of(terms_.begin(), terms_.end(), [index](const auto& t) { return t.first.exp[index] != 0; });
}

void MultiPoly::check_ctx(const MultiPoly& o) const {
  if (nvars_ != o.nvars_)
    throw ContextMismatch("polynomials over different spaces (" + std::to_string(nvars_) + " vs " +
                          std::to_string(o.nvars_) + " variables)");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_ctx(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_ctx(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ctx(b);
  MultiPoly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw PreconditionError("negative power");
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Rational MultiPoly::evaluate(const Vec& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw ContextMismatch("evaluate: wrong point dimension");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m.exp[i]; ++e) v *= point[i];
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images, int out_nvars) const {
  if (static_cast<int>(images.size()) != nvars_) throw ContextMismatch("substitute: wrong number of images");
  int out_n = images.empty() ? out_nvars : images.front().nvars();
  if (out_n < 0) throw PreconditionError("substitute: unknown target arity");
  for (const auto& im : images)
    if (im.nvars() != out_n) throw ContextMismatch("substitute: images over different spaces");
  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  auto power = [&](int i, int e) -> const MultiPoly& {
    auto& row = powers[i];
    if (row.empty()) row.push_back(constant(out_n, 1));
    while (static_cast<int>(row.size()) <= e) row.push_back(row.back() * images[i]);
    return row[e];
  };
  MultiPoly out(out_n);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(out_n, c);
    for (int i = 0; i < nvars_; ++i)
      if (m.exp[i]) t *= power(i, m.exp[i]);
    out += t;
  }
  return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& labels) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool is_const = m.degree() == 0;
    if (a != 1 || is_const) {
      os << to_display(a);
      if (!is_const) os << "*";
    }
    bool first_var = true;
    for (int i = 0; i < nvars_; ++i) {
      if (!m.exp[i]) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << (i < static_cast<int>(labels.size()) ? labels[i] : "x" + std::to_string(i + 1));
      if (m.exp[i] > 1) os << "^" << static_cast<int>(m.exp[i]);
    }
  }
  return os.str();
}

std::string MultiPoly::to_string() const { return to_string({}); }

// ---------------------------------------------------------------- free functions

std::uint64_t graded_dim(int j, int n) {
  if (n < 0) throw PreconditionError("graded_dim: negative dimension");
  if (j < 0) return 0;
  if (n == 0) return j == 0 ? 1 : 0;
  // binomial(j + n - 1, n - 1)
  std::uint64_t r = 1;
  for (int i = 1; i <= n - 1; ++i) r = r * static_cast<std::uint64_t>(j + i) / static_cast<std::uint64_t>(i);
  return r;
}

namespace {

void enumerate_monomials(int n, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == n - 1) {
    cur.exp[var] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    cur.exp[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.exp[var] = static_cast<std::uint8_t>(e);
    enumerate_monomials(n, var + 1, remaining - e, cur, out);
  }
  cur.exp[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.push_back(Monomial{});
    return out;
  }
  Monomial cur;
  enumerate_monomials(n, 0, d, cur, out);
  return out;
}

int pivot_index(const Vec& l) {
  for (std::size_t i = 0; i < l.size(); ++i)
    if (sgn(l[i]) != 0) return static_cast<int>(i);
  throw PreconditionError("linear form is zero");
}

namespace {

// Splits p by the exponent of x_{piv}: p = sum_k x_piv^k * parts[k].
std::vector<MultiPoly> split_by_variable(const MultiPoly& p, int piv) {
  std::vector<MultiPoly> parts;
  for (const auto& [m, c] : p.terms()) {
    int k = m.exp[piv];
    if (static_cast<int>(parts.size()) <= k) parts.resize(k + 1, MultiPoly(p.nvars()));
    Monomial rest = m;
    rest.exp[piv] = 0;
    parts[k].add_term(rest, c);
  }
  return parts;
}

}  // namespace

std::optional<MultiPoly> divides_exactly(const MultiPoly& p, const Vec& l) {
  if (static_cast<int>(l.size()) != p.nvars()) throw ContextMismatch("divides_exactly: dimension mismatch");
  int piv = pivot_index(l);
  if (p.is_zero()) return MultiPoly(p.nvars());
  const Rational& lp = l[piv];
  Vec rest = l;
  rest[piv] = 0;
  MultiPoly tail = MultiPoly::linear(rest);
  auto parts = split_by_variable(p, piv);
  int top = static_cast<int>(parts.size()) - 1;
  Rational inv = 1 / lp;
  // Synthetic division in x_piv with coefficients in the other variables.
  std::vector<MultiPoly> q(std::max(top, 0), MultiPoly(p.nvars()));
  MultiPoly carry = parts[top];
  for (int k = top; k >= 1; --k) {
    q[k - 1] = carry * inv;
    carry = parts[k - 1] - tail * q[k - 1];
  }
  if (!carry.is_zero()) return std::nullopt;
  MultiPoly out(p.nvars());
  Monomial xp;
  for (int k = 0; k < top; ++k) {
    xp.exp[piv] = static_cast<std::uint8_t>(k);
    out += q[k] * MultiPoly::term(p.nvars(), xp, 1);
  }
  return out;
}

MultiPoly restrict_mod(const MultiPoly& p, const Vec& l) {
  if (static_cast<int>(l.size()) != p.nvars()) throw ContextMismatch("restrict_mod: dimension mismatch");
  int piv = pivot_index(l);
  Vec rest = l;
  rest[piv] = 0;
  MultiPoly expr = MultiPoly::linear(rest) * Rational(-1 / l[piv]);
  return substitute_x(p, expr, piv);
}

MultiPoly substitute_x(const MultiPoly& p, const MultiPoly& expr, int index) {
  if (expr.nvars() != p.nvars()) throw ContextMismatch("substitute_x: dimension mismatch");
  if (index < 0 || index >= p.nvars()) throw PreconditionError("substitute_x: index out of range");
  if (expr.involves(index)) throw PreconditionError("substitute_x: expression involves the substituted variable");
  std::vector<MultiPoly> images;
  for (int i = 0; i < p.nvars(); ++i) images.push_back(i == index ? expr : MultiPoly::variable(p.nvars(), i));
  return p.substitute(images);
}

MultiPoly in_linear_coordinate(const MultiPoly& p, const Vec& l, int* pivot_out) {
  if (static_cast<int>(l.size()) != p.nvars()) throw ContextMismatch("in_linear_coordinate: dimension mismatch");
  int piv = pivot_index(l);
  if (pivot_out) *pivot_out = piv;
  Vec rest = l;
  rest[piv] = 0;
  // x_piv = (u - rest.x) / l_piv with u occupying slot piv
  MultiPoly expr = (MultiPoly::variable(p.nvars(), piv) - MultiPoly::linear(rest)) * Rational(1 / l[piv]);
  std::vector<MultiPoly> images;
  for (int i = 0; i < p.nvars(); ++i) images.push_back(i == piv ? expr : MultiPoly::variable(p.nvars(), i));
  return p.substitute(images);
}

// ---------------------------------------------------------------- RationalFn

RationalFn::RationalFn(int nvars) : num_(nvars) {}

RationalFn::RationalFn(MultiPoly numerator) : num_(std::move(numerator)) {}

RationalFn RationalFn::inverse_of_product(int nvars, const std::vector<Vec>& forms, const Rational& scalar) {
  if (sgn(scalar) == 0) throw PreconditionError("inverse_of_product: zero scalar");
  RationalFn r(nvars);
  Rational s = scalar;
  for (const auto& f : forms) {
    if (static_cast<int>(f.size()) != nvars) throw ContextMismatch("inverse_of_product: dimension mismatch");
    int piv = pivot_index(f);
    s /= f[piv];
    r.den_[scaled(f, 1 / f[piv])] += 1;
  }
  r.num_ = MultiPoly::constant(nvars, s);
  return r;
}

MultiPoly RationalFn::denominator() const {
  MultiPoly d = MultiPoly::constant(nvars(), 1);
  for (const auto& [l, a] : den_) d *= MultiPoly::linear(l).pow(a);
  return d;
}

std::optional<MultiPoly> RationalFn::as_polynomial() const {
  if (!den_.empty()) return std::nullopt;
  return num_;
}

void RationalFn::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = divides_exactly(num_, it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
}

void RationalFn::bring_to(const std::map<Vec, int, VecLess>& target) {
  for (const auto& [l, a] : target) {
    int have = 0;
    if (auto it = den_.find(l); it != den_.end()) have = it->second;
    if (a > have) num_ *= MultiPoly::linear(l).pow(a - have);
  }
  den_ = target;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (nvars() != o.nvars()) throw ContextMismatch("rational functions over different spaces");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  auto target = den_;
  for (const auto& [l, a] : o.den_) target[l] = std::max(target[l], a);
  RationalFn other = o;
  bring_to(target);
  other.bring_to(target);
  num_ += other.num_;
  reduce();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  if (nvars() != o.nvars()) throw ContextMismatch("rational functions over different spaces");
  num_ *= o.num_;
  for (const auto& [l, a] : o.den_) den_[l] += a;
  reduce();
  return *this;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

bool RationalFn::operator==(const RationalFn& o) const { return (*this - o).is_zero(); }

std::string RationalFn::to_string(const std::vector<std::string>& labels) const {
  if (den_.empty()) return num_.to_string(labels);
  std::string s = "(" + num_.to_string(labels) + ") / (";
  bool first = true;
  for (const auto& [l, a] : den_) {
    if (!first) s += "*";
    first = false;
    s += "(" + MultiPoly::linear(l).to_string(labels) + ")";
    if (a > 1) s += "^" + std::to_string(a);
  }
  return s + ")";
}

}  // namespace gkm
