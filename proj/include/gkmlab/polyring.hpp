#pragma once

// Exact sparse multivariate polynomials over Q, the rational functions whose
// denominators are products of linear forms, and the linear-form operations
// (exact division, reduction modulo a form, substitution) that every
// compatibility condition in the library is built from.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkmlab/rational.hpp"

namespace gkm {

inline constexpr int kMaxVars = 12;

/// The ambient space g* of weights: its dimension and coordinate labels.
class SpaceCtx {
 public:
  SpaceCtx() = default;
  explicit SpaceCtx(std::vector<std::string> labels);
  static SpaceCtx standard(int dim, const std::string& prefix);

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Same space with one more coordinate appended.
  SpaceCtx extended(const std::string& label) const;

  bool operator==(const SpaceCtx& other) const = default;

 private:
  std::vector<std::string> labels_;
};

struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  int degree() const;
  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;
};

/// Graded-lex order with larger monomials first (x1 > x2 > ...).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit MultiPoly(int nvars = 0);

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);
  /// The degree-1 form sum_i l_i x_i.
  static MultiPoly linear(const Vec& l);
  static MultiPoly term(int nvars, const Monomial& m, const Rational& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  MultiPoly homogeneous_part(int degree) const;
  Rational coeff(const Monomial& m) const;
  /// Coefficient vector of a degree-1 homogeneous polynomial.
  Vec linear_coefficients() const;
  /// Whether the polynomial mentions variable `index`.
  bool involves(int index) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const;

  MultiPoly pow(int k) const;
  Rational evaluate(const Vec& point) const;

  /// Ring homomorphism x_i -> images[i]. All images share one arity, which
  /// becomes the arity of the result (`out_nvars` is used when nvars() == 0).
  MultiPoly substitute(const std::vector<MultiPoly>& images, int out_nvars = -1) const;

  std::string to_string(const std::vector<std::string>& labels) const;
  std::string to_string() const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Rational& c);

 private:
  void check_ctx(const MultiPoly& o) const;

  int nvars_;
  TermMap terms_;
};

/// dim S^j of an n-dimensional space: binomial(j+n-1, n-1) for j >= 0, else 0.
/// n = 0 is accepted (the zero space: 1 in degree 0, nothing above).
std::uint64_t graded_dim(int j, int n);

/// All monomials of total degree d in n variables, in GrlexGreater order.
std::vector<Monomial> monomials_of_degree(int n, int d);

/// q with p = l*q, or nullopt if l does not divide p. Throws on l = 0.
std::optional<MultiPoly> divides_exactly(const MultiPoly& p, const Vec& l);

/// Representative of p in S/(l): the pivot variable (first nonzero
/// coordinate of l) is eliminated through l = 0. Throws on l = 0.
MultiPoly restrict_mod(const MultiPoly& p, const Vec& l);

/// p with x_{index} replaced by expr; expr must not involve x_{index}.
MultiPoly substitute_x(const MultiPoly& p, const MultiPoly& expr, int index);

/// Rewrites p in coordinates where the pivot slot of l stands for l itself:
/// returns P' with P'(l(x), x_{-pivot}) = p(x). Coefficients of P' with pivot
/// exponent < a vanish iff l^a divides p.
MultiPoly in_linear_coordinate(const MultiPoly& p, const Vec& l, int* pivot_out = nullptr);

/// Index of the first nonzero coordinate; throws on the zero vector.
int pivot_index(const Vec& l);

/// A quotient num / prod(l_i^{a_i}) with each l_i a linear form normalized to
/// first nonzero coordinate 1. Every denominator the library meets is a
/// product of axial values or slope differences, so cancellation is decided
/// by exact division by linear forms and the representation is canonical
/// after reduce().
class RationalFn {
 public:
  explicit RationalFn(int nvars = 0);
  RationalFn(MultiPoly numerator);  // NOLINT: polynomials embed implicitly

  /// scalar / prod(forms). Throws on a zero form or zero scalar.
  static RationalFn inverse_of_product(int nvars, const std::vector<Vec>& forms,
                                       const Rational& scalar = 1);

  int nvars() const { return num_.nvars(); }
  const MultiPoly& numerator() const { return num_; }
  const std::map<Vec, int, VecLess>& denominator_factors() const { return den_; }
  MultiPoly denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  std::optional<MultiPoly> as_polynomial() const;

  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  RationalFn operator-() const;
  bool operator==(const RationalFn& o) const;

  std::string to_string(const std::vector<std::string>& labels) const;

 private:
  void reduce();
  void bring_to(const std::map<Vec, int, VecLess>& target);

  MultiPoly num_;
  std::map<Vec, int, VecLess> den_;
};

}  // namespace gkm
