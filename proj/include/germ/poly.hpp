#pragma once

// Exact polynomials over Z and rational generating functions P(q)/(1-q^d),
// ordered by their germ as q -> 1 from below.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace germ {

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of q^i; the highest stored coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(std::size_t degree, const mpz_class& c = 1);
  /// Indicator polynomial of a '0'/'1' string: sum of q^i over the 1 positions.
  static IntPolynomial from_bits(std::string_view bits);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

  /// Multiplication by q^k.
  IntPolynomial shifted(std::size_t k) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// P(q) / (1 - q^period). Not reduced to lowest terms; equality of germs is
/// decided by cross-multiplication.
struct RationalGF {
  IntPolynomial numerator;
  std::size_t period = 1;

  RationalGF() = default;
  RationalGF(IntPolynomial num, std::size_t d);

  /// Germ-equality (same function), not structural equality.
  bool same_germ(const RationalGF& other) const;
};

/// 1 - q^d.
IntPolynomial one_minus_q_pow(std::size_t d);

/// Coefficients of p(1 - t) in powers of t, up to (and including) t^max_order.
std::vector<mpz_class> taylor_at_one(const IntPolynomial& p, std::size_t max_order);

/// Sign of p(q) on some interval (1 - eps, 1): the sign of the lowest nonzero
/// coefficient of p(1 - t). Returns 0 only for the zero polynomial.
int poly_sign_near_one(const IntPolynomial& p);

/// Sign of sum_j c_j q^j near 1 for small integer coefficients (|c_j| <= 1
/// in practice). Uses 128-bit accumulators when every binomial moment fits,
/// GMP otherwise.
int small_sign_near_one(std::span<const signed char> coeffs);

std::strong_ordering poly_germ_compare(const IntPolynomial& p, const IntPolynomial& r);
std::strong_ordering germ_compare(const RationalGF& f, const RationalGF& g);

/// Germ comparison of the indicator polynomials of two '0'/'1' strings.
/// Strings of different length compare as if padded with trailing zeros.
std::strong_ordering bits_germ_compare(std::string_view a, std::string_view b);

/// Laurent coefficients a_{-1}, a_0, ..., a_{k-2} of a germ in t = 1 - q.
struct LaurentPrefix {
  std::vector<mpq_class> coeffs;  // coeffs[0] holds a_{-1}

  /// a_n for n >= -1.
  const mpq_class& at(int n) const { return coeffs.at(static_cast<std::size_t>(n + 1)); }
  std::size_t size() const { return coeffs.size(); }
  const mpq_class& density() const { return at(-1); }
};

LaurentPrefix laurent_prefix(const RationalGF& f, std::size_t k = 4);

struct LaurentGap {
  int order = 0;     // n such that a_n(f) != a_n(g) first
  mpq_class value;   // a_n(f) - a_n(g)
};

/// First Laurent coefficient where f and g differ; nullopt for equal germs.
std::optional<LaurentGap> leading_laurent_gap(const RationalGF& f, const RationalGF& g);

/// "num/den" with an explicit denominator, e.g. "6/1", "-1/4".
std::string rational_string(const mpq_class& x);
/// Accepts "num/den" or a bare integer.
mpq_class parse_rational(std::string_view text);

std::string ordering_name(std::strong_ordering o);

}  // namespace germ
