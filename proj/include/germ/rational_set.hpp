#pragma once

// Eventually periodic subsets of N, forbidden-distance sets, and the
// truncated-germ valuation (density, constant term).
//
// Bit strings throughout the library are std::string values over {'0','1'};
// index n holds the indicator of n.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "germ/poly.hpp"

namespace germ {

/// Throws std::invalid_argument unless every character is '0' or '1'.
void require_bits(std::string_view bits, std::string_view what = "bit string");

/// Finite set D of positive forbidden distances, kept sorted and deduplicated.
class DistanceSet {
 public:
  DistanceSet() = default;
  DistanceSet(std::initializer_list<long long> values);
  explicit DistanceSet(std::span<const long long> values);

  /// Comma list such as "3,5". The empty string is the empty set.
  static DistanceSet parse(std::string_view list);

  std::span<const std::size_t> values() const { return values_; }
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  /// Largest element; 0 for the empty set.
  std::size_t norm() const { return values_.empty() ? 0 : values_.back(); }
  std::size_t min() const { return values_.empty() ? 0 : values_.front(); }
  bool contains(std::size_t d) const;

  std::string to_string() const;
  friend bool operator==(const DistanceSet&, const DistanceSet&) = default;

 private:
  std::vector<std::size_t> values_;
};

/// Eventually periodic subset of N: indicator = preperiod, then repetend
/// repeated forever. Always held in canonical form (primitive repetend,
/// shortest preperiod), so structural equality is set equality.
class RationalSet {
 public:
  /// The empty set.
  RationalSet() : repetend_("0") {}

  /// Canonicalizes; throws on an empty repetend or non-bit characters.
  static RationalSet normalize(std::string preperiod, std::string repetend);
  /// "pre|rep", e.g. "|10" or "111|0".
  static RationalSet parse(std::string_view text);
  static RationalSet finite(std::string_view bits) { return normalize(std::string(bits), "0"); }
  static RationalSet periodic(std::string_view repetend) { return normalize("", std::string(repetend)); }
  static RationalSet naturals() { return periodic("1"); }

  const std::string& preperiod() const { return preperiod_; }
  const std::string& repetend() const { return repetend_; }
  std::size_t period() const { return repetend_.size(); }

  bool contains(std::size_t n) const;
  /// Indicator bits of 0 .. n-1.
  std::string prefix(std::size_t n) const;
  bool is_finite() const { return repetend_ == "0"; }
  bool is_empty() const { return preperiod_.empty() && repetend_ == "0"; }

  std::string to_string() const { return preperiod_ + "|" + repetend_; }
  friend bool operator==(const RationalSet&, const RationalSet&) = default;

 private:
  RationalSet(std::string pre, std::string rep) : preperiod_(std::move(pre)), repetend_(std::move(rep)) {}

  std::string preperiod_;
  std::string repetend_;
};

/// S_q as a rational function with denominator 1 - q^{|repetend|}.
RationalGF gen_fun(const RationalSet& s);

bool is_avoiding(std::string_view bits, const DistanceSet& d);
/// Checked on preperiod + repetend repeated ceil(||D|| / |rep|) + 2 times.
bool is_avoiding(const RationalSet& s, const DistanceSet& d);

struct GreedyResult {
  std::string bits;
  /// Set when the trailing ||D||-bit state recurs within the horizon.
  std::optional<RationalSet> detected;
};

/// Lexicographically first D-avoiding indicator string of length `horizon`.
GreedyResult greedy(const DistanceSet& d, std::size_t horizon);

/// S + t.
RationalSet shift(const RationalSet& s, std::size_t t);

/// (a_{-1}, a_0): density and constant term of the Laurent expansion in 1-q.
/// Construction enforces the admissible classes (0, k), (1, -k) with k a
/// nonnegative integer, or (p, x) with 0 < p < 1.
class Valuation {
 public:
  Valuation(mpq_class density, mpq_class a0);

  const mpq_class& density() const { return density_; }
  const mpq_class& a0() const { return a0_; }

  /// Lexicographic on (density, a0).
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b);

 private:
  mpq_class density_;
  mpq_class a0_;
};

Valuation valuation(const RationalSet& s);

std::strong_ordering set_compare(const RationalSet& s, const RationalSet& t);

}  // namespace germ
