#include "germ/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace germ {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const mpz_class& c) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_bits(std::string_view bits) {
  std::vector<mpz_class> v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v[i] = 1;
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
  }
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> v(k + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<mpz_class> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    mpz_class mag = abs(c);
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += (mag != 1 ? "*q" : "q");
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

RationalGF::RationalGF(IntPolynomial num, std::size_t d) : numerator(std::move(num)), period(d) {
  if (period == 0) throw std::invalid_argument("RationalGF period must be positive");
}

bool RationalGF::same_germ(const RationalGF& other) const {
  return numerator * one_minus_q_pow(other.period) == other.numerator * one_minus_q_pow(period);
}

IntPolynomial one_minus_q_pow(std::size_t d) {
  std::vector<mpz_class> v(d + 1);
  v[0] += 1;
  v[d] -= 1;
  return IntPolynomial(std::move(v));
}

std::vector<mpz_class> taylor_at_one(const IntPolynomial& p, std::size_t max_order) {
  // p(1-t) = sum_k t^k (-1)^k sum_j c_j C(j,k)
  const auto& c = p.coeffs();
  std::vector<mpz_class> out(max_order + 1);
  std::vector<mpz_class> binom(c.size(), 1);  // C(j, k) for the current k
  for (std::size_t k = 0; k <= max_order && k < c.size(); ++k) {
    if (k > 0) {
      for (std::size_t j = k; j < c.size(); ++j) {
        binom[j] *= static_cast<unsigned long>(j - k + 1);
        mpz_divexact_ui(binom[j].get_mpz_t(), binom[j].get_mpz_t(), static_cast<unsigned long>(k));
      }
    }
    mpz_class s = 0;
    for (std::size_t j = k; j < c.size(); ++j) s += c[j] * binom[j];
    out[k] = (k % 2 == 0) ? s : mpz_class(-s);
  }
  return out;
}

int poly_sign_near_one(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  std::vector<mpz_class> binom(c.size(), 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) {
      for (std::size_t j = k; j < c.size(); ++j) {
        binom[j] *= static_cast<unsigned long>(j - k + 1);
        mpz_divexact_ui(binom[j].get_mpz_t(), binom[j].get_mpz_t(), static_cast<unsigned long>(k));
      }
    }
    mpz_class s = 0;
    for (std::size_t j = k; j < c.size(); ++j) s += c[j] * binom[j];
    if (int sg = sgn(s); sg != 0) return (k % 2 == 0) ? sg : -sg;
  }
  return 0;
}

namespace {

// Largest n with C(n, n/2) * n comfortably inside a signed 128-bit integer.
constexpr std::size_t kInt128Limit = 120;

template <class Int>
int moment_sign(std::span<const signed char> c) {
  std::size_t n = c.size();
  while (n > 0 && c[n - 1] == 0) --n;
  std::vector<Int> binom(n, Int(1));
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      for (std::size_t j = k; j < n; ++j) {
        binom[j] *= Int(static_cast<long>(j - k + 1));
        binom[j] /= Int(static_cast<long>(k));
      }
    }
    Int s(0);
    for (std::size_t j = k; j < n; ++j) {
      if (c[j] > 0) s += binom[j] * Int(static_cast<long>(c[j]));
      else if (c[j] < 0) s -= binom[j] * Int(static_cast<long>(-c[j]));
    }
    if (s != Int(0)) {
      int sg = s > Int(0) ? 1 : -1;
      return (k % 2 == 0) ? sg : -sg;
    }
  }
  return 0;
}

}  // namespace

int small_sign_near_one(std::span<const signed char> coeffs) {
  if (coeffs.size() <= kInt128Limit) {
    for (signed char x : coeffs) {
      if (x < -1 || x > 1) return moment_sign<mpz_class>(coeffs);
    }
    return moment_sign<__int128>(coeffs);
  }
  return moment_sign<mpz_class>(coeffs);
}

std::strong_ordering poly_germ_compare(const IntPolynomial& p, const IntPolynomial& r) {
  int s = poly_sign_near_one(p - r);
  return s > 0 ? std::strong_ordering::greater
               : (s < 0 ? std::strong_ordering::less : std::strong_ordering::equal);
}

std::strong_ordering germ_compare(const RationalGF& f, const RationalGF& g) {
  IntPolynomial diff = f.numerator * one_minus_q_pow(g.period) - g.numerator * one_minus_q_pow(f.period);
  int s = poly_sign_near_one(diff);
  return s > 0 ? std::strong_ordering::greater
               : (s < 0 ? std::strong_ordering::less : std::strong_ordering::equal);
}

std::strong_ordering bits_germ_compare(std::string_view a, std::string_view b) {
  if (a == b) return std::strong_ordering::equal;
  std::size_t n = std::max(a.size(), b.size());
  std::vector<signed char> diff(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int x = i < a.size() && a[i] == '1';
    int y = i < b.size() && b[i] == '1';
    diff[i] = static_cast<signed char>(x - y);
  }
  int s = small_sign_near_one(diff);
  return s > 0 ? std::strong_ordering::greater
               : (s < 0 ? std::strong_ordering::less : std::strong_ordering::equal);
}

LaurentPrefix laurent_prefix(const RationalGF& f, std::size_t k) {
  if (k == 0) throw std::invalid_argument("laurent_prefix needs k >= 1");
  // f = N(1-t) / (t * u(t)),  u(t) = (1 - (1-t)^d) / t,  u(0) = d.
  std::vector<mpz_class> num = taylor_at_one(f.numerator, k - 1);
  const std::size_t d = f.period;
  std::vector<mpz_class> u(k);
  mpz_class binom = d;  // C(d, i+1)
  for (std::size_t i = 0; i < k && i < d; ++i) {
    u[i] = (i % 2 == 0) ? binom : mpz_class(-binom);
    binom *= static_cast<unsigned long>(d - i - 1);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(i + 2));
  }
  LaurentPrefix out;
  out.coeffs.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    mpq_class acc(num[i]);
    for (std::size_t l = 1; l <= i; ++l) acc -= mpq_class(u[l]) * out.coeffs[i - l];
    acc /= mpq_class(u[0]);
    acc.canonicalize();
    out.coeffs[i] = acc;
  }
  return out;
}

std::optional<LaurentGap> leading_laurent_gap(const RationalGF& f, const RationalGF& g) {
  IntPolynomial diff = f.numerator * one_minus_q_pow(g.period) - g.numerator * one_minus_q_pow(f.period);
  if (diff.is_zero()) return std::nullopt;
  // the difference has a pole of order <= 2 over its numerator's t-order
  const std::size_t k = static_cast<std::size_t>(diff.degree()) + 2;
  LaurentPrefix a = laurent_prefix(f, k);
  LaurentPrefix b = laurent_prefix(g, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (a.coeffs[i] != b.coeffs[i]) return LaurentGap{static_cast<int>(i) - 1, a.coeffs[i] - b.coeffs[i]};
  }
  throw std::logic_error("germs differ but no Laurent coefficient does");
}

std::string rational_string(const mpq_class& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string ordering_name(std::strong_ordering o) {
  if (o < 0) return "Less";
  if (o > 0) return "Greater";
  return "Equal";
}

}  // namespace germ
