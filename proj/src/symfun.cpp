#include "gkmlab/symfun.hpp"

#include <algorithm>
#include <random>

#include "gkmlab/error.hpp"

namespace gkm {

std::vector<MultiPoly> elementary_symmetric(const std::vector<MultiPoly>& X) {
  int nv = X.empty() ? 0 : X.front().nvars();
  std::vector<MultiPoly> e{MultiPoly::constant(nv, 1)};
  for (const auto& x : X) {
    e.push_back(MultiPoly(nv));
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += x * e[k - 1];
  }
  return e;
}

std::vector<Rational> elementary_symmetric(const std::vector<Rational>& X) {
  std::vector<Rational> e{1};
  for (const auto& x : X) {
    e.push_back(0);
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += x * e[k - 1];
  }
  return e;
}

MultiPoly complete_homogeneous(const std::vector<MultiPoly>& X, int k) {
  int nv = X.empty() ? 0 : X.front().nvars();
  if (k < 0) return MultiPoly(nv);
  std::vector<MultiPoly> h(k + 1, MultiPoly(nv));
  h[0] = MultiPoly::constant(nv, 1);
  for (const auto& x : X)
    for (int t = 1; t <= k; ++t) h[t] += x * h[t - 1];
  return h[k];
}

Rational complete_homogeneous(const std::vector<Rational>& X, int k) {
  if (k < 0) return 0;
  std::vector<Rational> h(k + 1);
  h[0] = 1;
  for (const auto& x : X)
    for (int t = 1; t <= k; ++t) h[t] += x * h[t - 1];
  return h[k];
}

namespace {

Vec difference_form(int nvars, int a, int b) {
  Vec v(nvars);
  v[a] = 1;
  v[b] = -1;
  return v;
}

RationalFn node_weight(int nvars, int m, int k) {
  std::vector<Vec> forms;
  for (int j = 0; j < m; ++j)
    if (j != k) forms.push_back(difference_form(nvars, k, j));
  return RationalFn::inverse_of_product(nvars, forms);
}

void check_distinct(const std::vector<Rational>& X) {
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t j = i + 1; j < X.size(); ++j)
      if (X[i] == X[j]) throw PreconditionError("repeated node " + to_display(X[i]));
}

}  // namespace

SymbolicIdentity hom_sym_identity(int m, int N) {
  if (m < 1 || m > kMaxVars) throw PreconditionError("hom_sym_identity: bad m");
  SymbolicIdentity id;
  id.lhs = RationalFn(m);
  std::vector<MultiPoly> vars;
  for (int k = 0; k < m; ++k) vars.push_back(MultiPoly::variable(m, k));
  for (int k = 0; k < m; ++k) id.lhs += RationalFn(vars[k].pow(N)) * node_weight(m, m, k);
  id.rhs = complete_homogeneous(vars, N - m + 1);
  id.holds = id.lhs == RationalFn(id.rhs);
  return id;
}

NumericIdentity hom_sym_identity(const std::vector<Rational>& X, int N) {
  check_distinct(X);
  NumericIdentity id;
  std::size_t m = X.size();
  for (std::size_t k = 0; k < m; ++k) {
    Rational term = 1;
    for (int e = 0; e < N; ++e) term *= X[k];
    for (std::size_t j = 0; j < m; ++j)
      if (j != k) term /= X[k] - X[j];
    id.lhs += term;
  }
  id.rhs = complete_homogeneous(X, N - static_cast<int>(m) + 1);
  id.holds = id.lhs == id.rhs;
  return id;
}

RationalFn partial_fraction_reduce(const std::vector<MultiPoly>& P, int m) {
  if (P.empty()) throw PreconditionError("partial_fraction_reduce: empty P");
  int nv = P.front().nvars();
  if (m > nv) throw PreconditionError("partial_fraction_reduce: ring has too few variables");
  RationalFn total(nv);
  for (int k = 0; k < m; ++k) {
    MultiPoly xk = MultiPoly::variable(nv, k);
    MultiPoly value(nv), power = MultiPoly::constant(nv, 1);
    for (const auto& c : P) {
      value += c * power;
      power *= xk;
    }
    total += RationalFn(value) * node_weight(nv, m, k);
  }
  return total;
}

MultiPoly partial_fraction_reduce(const std::vector<MultiPoly>& P, const std::vector<Rational>& X) {
  check_distinct(X);
  if (P.empty()) throw PreconditionError("partial_fraction_reduce: empty P");
  MultiPoly total(P.front().nvars());
  for (std::size_t k = 0; k < X.size(); ++k) {
    Rational w = 1;
    for (std::size_t j = 0; j < X.size(); ++j)
      if (j != k) w /= X[k] - X[j];
    Rational power = 1;
    for (const auto& c : P) {
      total += c * (power * w);
      power *= X[k];
    }
  }
  return total;
}

bool is_symmetric(const MultiPoly& p, int r) {
  int nv = p.nvars();
  for (int i = 0; i + 1 < r; ++i) {
    std::vector<MultiPoly> images;
    for (int v = 0; v < nv; ++v) images.push_back(MultiPoly::variable(nv, v == i ? i + 1 : v == i + 1 ? i : v));
    if (!(p.substitute(images) == p)) return false;
  }
  return true;
}

SymmetricExtension symmetric_extend(const MultiPoly& P0, int m) {
  if (m < 2 || m + 1 > kMaxVars) throw PreconditionError("symmetric_extend: need 2 <= m < " + std::to_string(kMaxVars));
  if (P0.nvars() != m - 1) throw ContextMismatch("symmetric_extend: P0 must have m-1 variables");
  if (!is_symmetric(P0, m - 1)) throw PreconditionError("symmetric_extend: P0 is not symmetric");
  int r = m - 1;
  std::vector<MultiPoly> xs;
  for (int i = 0; i < r; ++i) xs.push_back(MultiPoly::variable(r, i));
  auto sig = elementary_symmetric(xs);

  SymmetricExtension out;
  out.in_elementary = MultiPoly(r);
  MultiPoly rest = P0;
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.terms().begin();
    Monomial sm;
    MultiPoly prod = MultiPoly::constant(r, c);
    for (int i = 0; i < r; ++i) {
      int step = lead.exp[i] - (i + 1 < r ? lead.exp[i + 1] : 0);
      if (step < 0) throw InconsistencyError("symmetric_extend: leading exponent not decreasing");
      sm.exp[i] = static_cast<std::uint8_t>(step);
      prod *= sig[i + 1].pow(step);
    }
    out.in_elementary.add_term(sm, c);
    rest -= prod;
  }

  int nv = m + 1;
  std::vector<MultiPoly> full;
  for (int i = 0; i < m; ++i) full.push_back(MultiPoly::variable(nv, i));
  auto sig_m = elementary_symmetric(full);
  MultiPoly Y = MultiPoly::variable(nv, m);
  std::vector<MultiPoly> images;
  for (int k = 1; k <= r; ++k) {
    MultiPoly s(nv);
    for (int l = 0; l <= k; ++l) s += sig_m[k - l] * Y.pow(l) * Rational(l % 2 ? -1 : 1);
    images.push_back(std::move(s));
  }
  out.P = out.in_elementary.substitute(images, nv);

  std::vector<MultiPoly> at_xm;
  for (int v = 0; v < nv; ++v) at_xm.push_back(MultiPoly::variable(nv, v == m ? m - 1 : v));
  std::vector<MultiPoly> embed;
  for (int v = 0; v < r; ++v) embed.push_back(MultiPoly::variable(nv, v));
  out.reconstructs = out.P.substitute(at_xm) == P0.substitute(embed, nv);
  out.symmetric = is_symmetric(out.P, m);
  return out;
}

Matrix vandermonde(const std::vector<Rational>& X) {
  int m = static_cast<int>(X.size());
  Matrix A(m, m);
  for (int j = 0; j < m; ++j) {
    Rational p = 1;
    for (int k = 0; k < m; ++k) {
      A.at(j, k) = p;
      p *= X[j];
    }
  }
  return A;
}

VandermondeInverse vandermonde_inverse(const std::vector<Rational>& X) {
  check_distinct(X);
  int m = static_cast<int>(X.size());
  VandermondeInverse out;
  Matrix A = vandermonde(X);
  auto inv = A.inverse();
  if (!inv) throw InconsistencyError("Vandermonde matrix with distinct nodes is singular");
  out.direct = *inv;
  out.closed_form = Matrix(m, m);
  out.expanded = Matrix(m, m);
  auto sigma = elementary_symmetric(X);
  for (int j = 0; j < m; ++j) {
    std::vector<Rational> others;
    for (int k = 0; k < m; ++k)
      if (k != j) others.push_back(X[k]);
    auto sigma_j = elementary_symmetric(others);
    Rational denom = 1;
    for (int k = 0; k < m; ++k)
      if (k != j) denom *= X[j] - X[k];
    for (int i = 1; i <= m; ++i) {
      int t = m - i;
      Rational sign = (m + i) % 2 ? -1 : 1;
      out.closed_form.at(i - 1, j) = sign * sigma_j[t] / denom;
      Rational expanded = 0, power = 1;
      for (int l = 0; l <= t; ++l) {
        expanded += (l % 2 ? -1 : 1) * sigma[t - l] * power;
        power *= X[j];
      }
      out.expanded.at(i - 1, j) = sign * expanded / denom;
    }
  }
  out.first_row_ok = true;
  for (int j = 0; j < m; ++j) {
    Rational prod = 1;
    for (int k = 0; k < m; ++k)
      if (k != j) prod *= -X[k] / (X[j] - X[k]);
    if (prod != out.direct.at(0, j)) out.first_row_ok = false;
  }
  out.agree = out.direct == out.closed_form && out.direct == out.expanded;
  out.identity_ok = A * out.closed_form == Matrix::identity(m);
  Rational det = 1;
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l) det *= X[l] - X[k];
  out.determinant_ok = det == A.determinant();
  return out;
}

std::vector<std::vector<RationalFn>> vandermonde_inverse_symbolic(const std::vector<MultiPoly>& X) {
  int m = static_cast<int>(X.size());
  if (m == 0) return {};
  int nv = X.front().nvars();
  std::vector<std::vector<RationalFn>> inv(m, std::vector<RationalFn>(m, RationalFn(nv)));
  for (int j = 0; j < m; ++j) {
    std::vector<MultiPoly> others;
    std::vector<Vec> forms;
    for (int k = 0; k < m; ++k) {
      if (k == j) continue;
      others.push_back(X[k]);
      MultiPoly diff = X[j] - X[k];
      if (diff.is_zero()) throw PreconditionError("repeated Vandermonde node");
      forms.push_back(diff.linear_coefficients());
    }
    auto sigma_j = others.empty() ? std::vector<MultiPoly>{MultiPoly::constant(nv, 1)} : elementary_symmetric(others);
    RationalFn w = RationalFn::inverse_of_product(nv, forms);
    for (int i = 1; i <= m; ++i) {
      Rational sign = (m + i) % 2 ? -1 : 1;
      inv[i - 1][j] = RationalFn(sigma_j[m - i] * sign) * w;
    }
  }
  return inv;
}

}  // namespace gkm

namespace gkm {

namespace {

std::vector<Rational> random_nodes(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 5);
  std::vector<Rational> X;
  while (static_cast<int>(X.size()) < m) {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    if (std::find(X.begin(), X.end(), x) == X.end()) X.push_back(x);
  }
  return X;
}

MultiPoly random_poly(std::mt19937_64& rng, int nvars, int max_degree, int terms) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, max_degree), var(0, nvars - 1);
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) ++m.exp[var(rng)];
    p.add_term(m, coeff(rng));
  }
  return p;
}

bool eq13_7_holds(const std::vector<Rational>& X) {
  int m = static_cast<int>(X.size());
  for (int j = 0; j < m; ++j) {
    std::vector<Rational> others;
    for (int k = 0; k < m; ++k)
      if (k != j) others.push_back(X[k]);
    auto sj = elementary_symmetric(others);
    for (int l = 0; l < m; ++l) {
      if (l == j) continue;
      Rational lhs = 1, rhs = 0, power = 1;
      for (int e = 0; e < m - 1; ++e) lhs *= X[l];
      for (int k = 0; k <= m - 2; ++k) {
        rhs += ((m - k) % 2 ? -1 : 1) * sj[m - 1 - k] * power;
        power *= X[l];
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<SuiteResult> appendix_check(int max_m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SuiteResult> out;

  SuiteResult sym{"hom_sym_identity symbolic"};
  for (int m = 1; m <= std::min(max_m, 4); ++m)
    for (int N = 0; N <= 6; ++N) {
      ++sym.cases;
      sym.passed += hom_sym_identity(m, N).holds;
    }
  out.push_back(sym);

  SuiteResult num{"hom_sym_identity numeric"};
  std::uniform_int_distribution<int> pickN(0, 10);
  for (int t = 0; t < 500; ++t) {
    int m = 1 + t % std::max(1, std::min(max_m + 2, 8));
    ++num.cases;
    num.passed += hom_sym_identity(random_nodes(rng, m), pickN(rng)).holds;
  }
  out.push_back(num);

  SuiteResult pf{"partial_fraction_reduce symbolic"};
  for (int t = 0; t < 100; ++t) {
    int m = 1 + t % std::min(max_m, 4);
    int nv = m + 1;
    int len = 1 + t % 5;
    std::vector<MultiPoly> P;
    for (int k = 0; k <= len; ++k) P.push_back(random_poly(rng, nv, 2, 3));
    ++pf.cases;
    pf.passed += partial_fraction_reduce(P, m).is_polynomial();
  }
  out.push_back(pf);

  SuiteResult van{"vandermonde three-way inverse"};
  for (int t = 0; t < 200; ++t) {
    int m = 1 + t % std::min(max_m, 6);
    auto r = vandermonde_inverse(random_nodes(rng, m));
    ++van.cases;
    van.passed += r.agree && r.first_row_ok && r.identity_ok && r.determinant_ok;
  }
  out.push_back(van);

  SuiteResult e137{"vandermonde row relation"};
  for (int t = 0; t < 100; ++t) {
    ++e137.cases;
    e137.passed += eq13_7_holds(random_nodes(rng, 2 + t % std::max(1, std::min(max_m, 6) - 1)));
  }
  out.push_back(e137);

  SuiteResult sext{"symmetric_extend reconstruction"};
  for (int m = 2; m <= std::min(max_m, 5); ++m) {
    std::vector<MultiPoly> xs;
    for (int i = 0; i < m - 1; ++i) xs.push_back(MultiPoly::variable(m - 1, i));
    auto sig = elementary_symmetric(xs);
    for (const auto& P0 : sig) {
      auto r = symmetric_extend(P0, m);
      ++sext.cases;
      sext.passed += r.reconstructs && r.symmetric;
    }
    auto r = symmetric_extend(sig.back() * sig[1] + sig[1].pow(2), m);
    ++sext.cases;
    sext.passed += r.reconstructs && r.symmetric;
  }
  out.push_back(sext);
  return out;
}

}  // namespace gkm
