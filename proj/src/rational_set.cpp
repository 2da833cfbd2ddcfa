#include "germ/rational_set.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_map>

namespace germ {

void require_bits(std::string_view bits, std::string_view what) {
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument(std::string(what) + " may contain only '0' and '1': \"" + std::string(bits) + "\"");
    }
  }
}

// ---------------------------------------------------------------- DistanceSet

DistanceSet::DistanceSet(std::initializer_list<long long> values)
    : DistanceSet(std::span<const long long>(values.begin(), values.size())) {}

DistanceSet::DistanceSet(std::span<const long long> values) {
  for (long long v : values) {
    if (v < 1) throw std::invalid_argument("forbidden distances must be positive, got " + std::to_string(v));
    values_.push_back(static_cast<std::size_t>(v));
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

DistanceSet DistanceSet::parse(std::string_view list) {
  std::vector<long long> out;
  std::size_t pos = 0;
  if (list.empty()) return {};
  while (pos <= list.size()) {
    std::size_t comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view item = list.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    long long v = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw std::invalid_argument("malformed distance list entry \"" + std::string(item) + "\"");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return DistanceSet(std::span<const long long>(out));
}

bool DistanceSet::contains(std::size_t d) const {
  return std::binary_search(values_.begin(), values_.end(), d);
}

std::string DistanceSet::to_string() const {
  std::string out;
  for (std::size_t v : values_) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

// ---------------------------------------------------------------- RationalSet

RationalSet RationalSet::normalize(std::string preperiod, std::string repetend) {
  require_bits(preperiod, "preperiod");
  require_bits(repetend, "repetend");
  if (repetend.empty()) throw std::invalid_argument("repetend must be nonempty");

  // primitive root: the first reoccurrence of rep inside rep+rep is its smallest period
  const std::size_t n = repetend.size();
  std::size_t p = (repetend + repetend).find(repetend, 1);
  if (n % p == 0) repetend.resize(p);

  // absorb preperiod bits that continue the cycle backwards
  while (!preperiod.empty() && preperiod.back() == repetend.back()) {
    std::rotate(repetend.rbegin(), repetend.rbegin() + 1, repetend.rend());
    preperiod.pop_back();
  }
  return RationalSet(std::move(preperiod), std::move(repetend));
}

RationalSet RationalSet::parse(std::string_view text) {
  std::size_t bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw std::invalid_argument("set must be written \"pre|rep\", got \"" + std::string(text) + "\"");
  }
  return normalize(std::string(text.substr(0, bar)), std::string(text.substr(bar + 1)));
}

bool RationalSet::contains(std::size_t n) const {
  if (n < preperiod_.size()) return preperiod_[n] == '1';
  return repetend_[(n - preperiod_.size()) % repetend_.size()] == '1';
}

std::string RationalSet::prefix(std::size_t n) const {
  std::string out(n, '0');
  for (std::size_t i = 0; i < n; ++i) out[i] = contains(i) ? '1' : '0';
  return out;
}

RationalGF gen_fun(const RationalSet& s) {
  const std::size_t d = s.period();
  IntPolynomial pre = IntPolynomial::from_bits(s.preperiod());
  IntPolynomial rep = IntPolynomial::from_bits(s.repetend());
  return RationalGF(pre * one_minus_q_pow(d) + rep.shifted(s.preperiod().size()), d);
}

bool is_avoiding(std::string_view bits, const DistanceSet& d) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '1') continue;
    for (std::size_t dist : d.values()) {
      if (i + dist >= bits.size()) break;
      if (bits[i + dist] == '1') return false;
    }
  }
  return true;
}

bool is_avoiding(const RationalSet& s, const DistanceSet& d) {
  const std::size_t rep = s.period();
  const std::size_t copies = (d.norm() + rep - 1) / rep + 2;
  return is_avoiding(s.prefix(s.preperiod().size() + copies * rep), d);
}

GreedyResult greedy(const DistanceSet& d, std::size_t horizon) {
  if (horizon == 0) throw std::invalid_argument("greedy horizon must be positive");
  const std::size_t norm = d.norm();
  GreedyResult out;
  out.bits.reserve(horizon);
  // state at position n = bits n-norm .. n-1, with virtual zeros before 0
  std::unordered_map<std::string, std::size_t> first_seen;
  auto state_at = [&](std::size_t n) {
    std::string st(norm, '0');
    for (std::size_t k = 0; k < norm; ++k) {
      if (n + k >= norm) st[k] = out.bits[n + k - norm];
    }
    return st;
  };
  for (std::size_t n = 0; n <= horizon; ++n) {
    if (!out.detected) {
      auto [it, inserted] = first_seen.emplace(state_at(n), n);
      if (!inserted) {
        std::size_t start = it->second;
        out.detected = RationalSet::normalize(out.bits.substr(0, start), out.bits.substr(start, n - start));
      }
    }
    if (n == horizon) break;
    bool free = true;
    for (std::size_t dist : d.values()) {
      if (dist <= n && out.bits[n - dist] == '1') {
        free = false;
        break;
      }
    }
    out.bits.push_back(free ? '1' : '0');
  }
  return out;
}

RationalSet shift(const RationalSet& s, std::size_t t) {
  return RationalSet::normalize(std::string(t, '0') + s.preperiod(), s.repetend());
}

// ---------------------------------------------------------------- Valuation

Valuation::Valuation(mpq_class density, mpq_class a0) : density_(std::move(density)), a0_(std::move(a0)) {
  density_.canonicalize();
  a0_.canonicalize();
  bool ok = false;
  if (density_ == 0) ok = a0_.get_den() == 1 && a0_ >= 0;
  else if (density_ == 1) ok = a0_.get_den() == 1 && a0_ <= 0;
  else ok = density_ > 0 && density_ < 1;
  if (!ok) {
    throw std::logic_error("inadmissible valuation (" + rational_string(density_) + ", " + rational_string(a0_) + ")");
  }
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (int c = cmp(a.density_, b.density_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(a.a0_, b.a0_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool operator==(const Valuation& a, const Valuation& b) { return a.density_ == b.density_ && a.a0_ == b.a0_; }

Valuation valuation(const RationalSet& s) {
  LaurentPrefix lp = laurent_prefix(gen_fun(s), 2);
  return Valuation(lp.at(-1), lp.at(0));
}

std::strong_ordering set_compare(const RationalSet& s, const RationalSet& t) {
  return germ_compare(gen_fun(s), gen_fun(t));
}

}  // namespace germ
