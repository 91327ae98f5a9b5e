#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkmlab/linalg.hpp"
#include "gkmlab/polyring.hpp"

namespace gkm {

/// sigma_0..sigma_m read off prod_i (T + X_i).
std::vector<MultiPoly> elementary_symmetric(const std::vector<MultiPoly>& X);
std::vector<Rational> elementary_symmetric(const std::vector<Rational>& X);

MultiPoly complete_homogeneous(const std::vector<MultiPoly>& X, int k);
Rational complete_homogeneous(const std::vector<Rational>& X, int k);

/// sum_k X_k^N / prod_{j != k} (X_k - X_j) against h_{N-m+1}(X), in the
/// ring Q[X_1..X_m].
struct SymbolicIdentity {
  RationalFn lhs;
  MultiPoly rhs;
  bool holds = false;
};
SymbolicIdentity hom_sym_identity(int m, int N);

struct NumericIdentity {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};
/// Throws PreconditionError on repeated values.
NumericIdentity hom_sym_identity(const std::vector<Rational>& X, int N);

/// sum_k P(X_k) / prod_{j != k}(X_k - X_j) with X_k the first m variables of
/// the coefficient ring; P given by its coefficients in Y. Returns the
/// reduced sum (polynomial by the corollary).
RationalFn partial_fraction_reduce(const std::vector<MultiPoly>& P, int m);
/// Numeric nodes: the result is a polynomial in the coefficient variables.
MultiPoly partial_fraction_reduce(const std::vector<MultiPoly>& P, const std::vector<Rational>& X);

struct SymmetricExtension {
  MultiPoly P;  // variables X_1..X_m, Y
  MultiPoly in_elementary;  // P0 as a polynomial in sigma_1..sigma_{m-1}
  bool reconstructs = false;  // P(X_m) = P0
  bool symmetric = false;     // coefficients of P symmetric in X_1..X_m
};
bool is_symmetric(const MultiPoly& p, int nvars_permuted);
/// P0 in variables X_1..X_{m-1}. Throws PreconditionError if not symmetric.
SymmetricExtension symmetric_extend(const MultiPoly& P0, int m);

/// A[j][k] = X_j^k (rows are nodes).
Matrix vandermonde(const std::vector<Rational>& X);

struct VandermondeInverse {
  Matrix direct;
  Matrix closed_form;   // sigma^j_{m-i} / prod (X_j - X_k)
  Matrix expanded;      // sigma^j expanded through the full sigma_k
  bool first_row_ok = false;
  bool agree = false;
  bool identity_ok = false;
  bool determinant_ok = false;
};
VandermondeInverse vandermonde_inverse(const std::vector<Rational>& X);

/// inv[k][j]: coefficient of the node-j value in the k-th power coefficient,
/// for linear-form nodes X_j. Throws PreconditionError on repeated nodes.
std::vector<std::vector<RationalFn>> vandermonde_inverse_symbolic(const std::vector<MultiPoly>& X);

struct SuiteResult {
  std::string name;
  int cases = 0;
  int passed = 0;
  bool ok() const { return cases == passed; }
};

/// The identity suites at sizes up to max_m (symbolic checks stop at 4,
/// the symmetric extension at 5). Random cases are seeded.
std::vector<SuiteResult> appendix_check(int max_m, std::uint64_t seed = 1);

}  // namespace gkm
