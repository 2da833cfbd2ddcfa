#include "germ/search.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#include "germ/oracle.hpp"

namespace germ {

namespace {

constexpr std::size_t kMaxBlock = 32;

std::uint64_t to_mask(std::string_view bits) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') m |= std::uint64_t{1} << i;
  }
  return m;
}

bool mask_avoiding(std::uint64_t mask, const DistanceSet& d) {
  for (std::size_t dist : d.values()) {
    if (dist >= 64) break;
    if (mask & (mask >> dist)) return false;
  }
  return true;
}

void legal_blocks(const DistanceSet& d, std::size_t m, std::size_t pos, std::uint64_t mask, std::string& cur,
                  std::vector<std::string>& out) {
  if (pos == m) {
    out.push_back(cur);
    return;
  }
  cur.push_back('0');
  legal_blocks(d, m, pos + 1, mask, cur, out);
  std::uint64_t with = mask | (std::uint64_t{1} << pos);
  if (mask_avoiding(with, d)) {
    cur.back() = '1';
    legal_blocks(d, m, pos + 1, with, cur, out);
  }
  cur.pop_back();
}

bool cross_avoiding(std::string_view q, std::string_view r, const DistanceSet& d) {
  // pairs with one element in q and the other in r
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] != '1') continue;
    for (std::size_t dist : d.values()) {
      std::size_t pos = q.size() + j;
      if (dist > pos) break;
      if (pos - dist < q.size() && q[pos - dist] == '1') return false;
    }
  }
  return true;
}

std::size_t default_m_max(const DistanceSet& d) { return std::max<std::size_t>(4 * d.norm(), d.norm() + 1); }

}  // namespace

// ------------------------------------------------------------------ DP

std::string DpTable::overall_best() const {
  const std::string* top = nullptr;
  for (const auto& e : best) {
    if (e && (top == nullptr || bits_germ_compare(*e, *top) > 0)) top = &*e;
  }
  return top ? *top : std::string();
}

DpTable dp_init(const DistanceSet& d, std::size_t m, std::size_t leading_zeros) {
  if (m <= d.norm()) throw std::invalid_argument("block length must exceed ||D||");
  if (m > kMaxBlock) throw std::invalid_argument("block length above 32 is unsupported");
  if (leading_zeros >= m) throw std::invalid_argument("leading zeros must be shorter than the block");
  DpTable t;
  t.block = m;
  t.stage = 1;
  t.leading_zeros = leading_zeros;
  std::string cur;
  legal_blocks(d, m, 0, 0, cur, t.suffixes);
  t.best.resize(t.suffixes.size());
  for (std::size_t i = 0; i < t.suffixes.size(); ++i) {
    if (t.suffixes[i].find('1') >= leading_zeros) t.best[i] = t.suffixes[i];
  }
  return t;
}

DpTable dp_step(const DpTable& table, const DistanceSet& d) {
  const std::size_t m = table.block;
  if (m <= d.norm() || m > kMaxBlock) throw std::invalid_argument("table block length incompatible with D");

  // s_{k,j} sigma_i beats s_{k,j'} sigma_i iff s_{k,j} beats s_{k,j'}, so one
  // ranking of stage k serves every suffix.
  std::vector<std::size_t> ranked;
  for (std::size_t j = 0; j < table.best.size(); ++j) {
    if (table.best[j]) ranked.push_back(j);
  }
  std::sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
    auto c = bits_germ_compare(*table.best[a], *table.best[b]);
    if (c == 0) throw std::logic_error("distinct DP entries with equal germ");
    return c > 0;
  });

  std::vector<std::uint64_t> masks(table.suffixes.size());
  for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = to_mask(table.suffixes[i]);

  DpTable next;
  next.block = m;
  next.stage = table.stage + 1;
  next.leading_zeros = table.leading_zeros;
  next.suffixes = table.suffixes;
  next.best.resize(table.suffixes.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j : ranked) {
      // junction legality only involves the last 2m bits
      if (mask_avoiding(masks[j] | (masks[i] << m), d)) {
        next.best[i] = *table.best[j] + table.suffixes[i];
        break;
      }
    }
  }
  return next;
}

std::string best_string(const DistanceSet& d, std::size_t length) {
  if (length == 0) return {};
  const std::size_t m = d.norm() + 1;
  const std::size_t stages = (length + m - 1) / m;
  const std::size_t pad = stages * m - length;
  DpTable t = dp_init(d, m, pad);
  while (t.stage < stages) t = dp_step(t, d);
  return t.overall_best().substr(pad);
}

std::vector<std::string> best_strings(const DistanceSet& d, std::size_t max_length) {
  std::vector<std::string> out(max_length + 1);
  const std::size_t m = d.norm() + 1;
  for (std::size_t pad = 0; pad < m; ++pad) {
    DpTable t = dp_init(d, m, pad);
    while (t.stage * m - pad <= max_length) {
      out[t.stage * m - pad] = t.overall_best().substr(pad);
      t = dp_step(t, d);
    }
  }
  return out;
}

// ------------------------------------------------------------------ windows

bool is_repeatable(std::string_view r, const DistanceSet& d) {
  if (r.size() <= d.norm()) throw std::invalid_argument("repeatable strings must be longer than ||D||");
  std::string rr(r);
  rr += r;
  return is_avoiding(rr, d);
}

std::optional<std::size_t> symmetry_offset(const DistanceSet& d) {
  if (d.empty()) throw std::invalid_argument("symmetry offset needs a nonempty D");
  for (std::size_t k = d.norm() + 1; k <= d.norm() + d.min(); ++k) {
    bool symmetric = true;
    for (std::size_t i = 1; i < k && symmetric; ++i) symmetric = d.contains(i) == d.contains(k - i);
    if (symmetric) return k;
  }
  return std::nullopt;
}

std::string kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::RepeatableWindow: return "RepeatableWindow";
    case CertificateKind::SymmetricOffset: return "SymmetricOffset";
    case CertificateKind::TwoBlockInduction: return "TwoBlockInduction";
  }
  return "?";
}

std::optional<Certificate> find_repeatable_winner(const DistanceSet& d, std::size_t m_max) {
  if (m_max <= d.norm()) throw std::invalid_argument("m_max must exceed ||D||");
  // sums of two elements of D first, then the remaining lengths in order
  std::vector<std::size_t> order;
  std::set<std::size_t> sums;
  for (std::size_t a : d.values()) {
    for (std::size_t b : d.values()) {
      if (a + b > d.norm() && a + b <= m_max) sums.insert(a + b);
    }
  }
  order.assign(sums.begin(), sums.end());
  for (std::size_t m = d.norm() + 1; m <= m_max; ++m) {
    if (!sums.contains(m)) order.push_back(m);
  }
  std::vector<std::string> best = best_strings(d, m_max);
  for (std::size_t m : order) {
    if (is_repeatable(best[m], d)) {
      return Certificate{d, RationalSet::periodic(best[m]), RepeatableWindowEvidence{best[m]}};
    }
  }
  return std::nullopt;
}

std::optional<Certificate> winner_symmetric(const DistanceSet& d) {
  if (d.empty()) return std::nullopt;
  auto k = symmetry_offset(d);
  if (!k) return std::nullopt;
  std::string window = best_string(d, *k);
  if (!is_repeatable(window, d)) throw std::logic_error("best window at the symmetry offset is not repeatable");
  return Certificate{d, RationalSet::periodic(window), SymmetricOffsetEvidence{*k, window}};
}

// ------------------------------------------------------------------ two blocks

std::optional<std::pair<std::string, std::string>> fact2_counterexample(const DistanceSet& d, std::string_view b) {
  const std::size_t len = b.size();
  std::vector<std::string> rivals;
  std::vector<std::string> all;
  oracle::enumerate_avoiding(d, len, [&](const std::string& s) {
    all.push_back(s);
    if (bits_germ_compare(s, b) > 0) rivals.push_back(s);
  });
  std::string bb(b);
  bb += b;
  for (const auto& r : rivals) {
    for (const auto& q : all) {
      if (!cross_avoiding(q, r, d)) continue;
      if (bits_germ_compare(q + r, bb) > 0) return std::pair{q, r};
    }
  }
  return std::nullopt;
}

namespace {

bool two_block_holds(const DistanceSet& d, std::string_view a, std::string_view b, const std::string& best_a,
                     const std::string& best_ab) {
  if (a.empty() || b.empty()) return false;
  if (best_a != a) return false;
  if (best_ab.size() != a.size() + b.size() || best_ab.compare(0, a.size(), a) != 0 ||
      best_ab.compare(a.size(), b.size(), b) != 0) {
    return false;
  }
  if (!is_avoiding(RationalSet::normalize(std::string(a), std::string(b)), d)) return false;
  return !fact2_counterexample(d, b).has_value();
}

}  // namespace

std::optional<Certificate> certify_two_block(const DistanceSet& d, std::string_view a, std::string_view b) {
  require_bits(a, "block A");
  require_bits(b, "block B");
  if (a.empty() || b.empty()) throw std::invalid_argument("blocks must be nonempty");
  if (!is_avoiding(a, d) || !is_avoiding(b, d)) throw std::invalid_argument("blocks must be D-avoiding");
  if (!two_block_holds(d, a, b, best_string(d, a.size()), best_string(d, a.size() + b.size()))) return std::nullopt;
  return Certificate{d, RationalSet::normalize(std::string(a), std::string(b)),
                     TwoBlockEvidence{std::string(a), std::string(b)}};
}

// ------------------------------------------------------------------ verify

bool verify(const Certificate& cert) {
  const DistanceSet& d = cert.distances;
  if (!is_avoiding(cert.winner, d)) return false;
  return std::visit(
      [&](const auto& ev) -> bool {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, RepeatableWindowEvidence>) {
          if (ev.window.size() <= d.norm()) return false;
          return best_string(d, ev.window.size()) == ev.window && is_repeatable(ev.window, d) &&
                 cert.winner == RationalSet::periodic(ev.window);
        } else if constexpr (std::is_same_v<T, SymmetricOffsetEvidence>) {
          if (d.empty() || ev.offset <= d.norm() || ev.window.size() != ev.offset) return false;
          for (std::size_t i = 1; i < ev.offset; ++i) {
            if (d.contains(i) != d.contains(ev.offset - i)) return false;
          }
          return best_string(d, ev.offset) == ev.window && is_repeatable(ev.window, d) &&
                 cert.winner == RationalSet::periodic(ev.window);
        } else {
          if (ev.block_a.empty() || ev.block_b.empty()) return false;
          return two_block_holds(d, ev.block_a, ev.block_b, best_string(d, ev.block_a.size()),
                                 best_string(d, ev.block_a.size() + ev.block_b.size())) &&
                 cert.winner == RationalSet::normalize(ev.block_a, ev.block_b);
        }
      },
      cert.evidence);
}

// ------------------------------------------------------------------ orchestration

SearchOutcome winner(const DistanceSet& d, const SearchBudget& budget) {
  const std::size_t m_max = budget.m_max ? budget.m_max : default_m_max(d);
  const std::size_t block_max = budget.block_max ? budget.block_max : 2 * d.norm() + 2;
  const std::size_t prefix_max = budget.prefix_max ? budget.prefix_max : 4 * block_max;

  if (auto c = winner_symmetric(d)) return {c, {}};
  if (m_max > d.norm()) {
    if (auto c = find_repeatable_winner(d, m_max)) return {c, {}};
  }

  std::vector<std::string> best = best_strings(d, std::min(prefix_max, block_max) + block_max);
  std::map<std::string, bool, std::less<>> fact2_cache;
  auto attempt = [&](std::size_t la, std::size_t lb) -> std::optional<Certificate> {
    const std::string& a = best[la];
    const std::string& ab = best[la + lb];
    if (ab.compare(0, la, a) != 0) return std::nullopt;
    std::string b = ab.substr(la);
    RationalSet s = RationalSet::normalize(a, b);
    if (!is_avoiding(s, d)) return std::nullopt;
    auto [it, inserted] = fact2_cache.try_emplace(b, false);
    if (inserted) it->second = !fact2_counterexample(d, b).has_value();
    if (!it->second) return std::nullopt;
    return Certificate{d, s, TwoBlockEvidence{a, b}};
  };
  // equal block lengths first, then longer leading blocks
  for (std::size_t lb = 1; lb <= block_max; ++lb) {
    if (lb <= prefix_max) {
      if (auto c = attempt(lb, lb)) return {c, {}};
    }
  }
  if (best.size() <= prefix_max + block_max) best = best_strings(d, prefix_max + block_max);
  for (std::size_t lb = 1; lb <= block_max; ++lb) {
    for (std::size_t la = 1; la <= prefix_max; ++la) {
      if (la == lb) continue;
      if (auto c = attempt(la, lb)) return {c, {}};
    }
  }
  return {std::nullopt, "inconclusive: no symmetric offset, no repeatable window up to m=" + std::to_string(m_max) +
                            ", no two-block certificate with |B| <= " + std::to_string(block_max) +
                            " and |A| <= " + std::to_string(prefix_max)};
}

// ------------------------------------------------------------------ JSON

nlohmann::json set_to_json(const RationalSet& s) {
  Valuation v = valuation(s);
  return {{"preperiod", s.preperiod()},
          {"repetend", s.repetend()},
          {"density", rational_string(v.density())},
          {"a0", rational_string(v.a0())}};
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json j;
  j["kind"] = kind_name(cert.kind());
  j["distances"] = std::vector<std::size_t>(cert.distances.values().begin(), cert.distances.values().end());
  j["canonical"] = set_to_json(cert.winner);
  j["winner"] = j["canonical"];
  std::visit(
      [&](const auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, RepeatableWindowEvidence>) {
          j["evidence"] = {{"window_length", ev.window.size()}, {"window", ev.window}};
        } else if constexpr (std::is_same_v<T, SymmetricOffsetEvidence>) {
          j["evidence"] = {{"offset", ev.offset}, {"window", ev.window}};
        } else {
          j["winner"]["preperiod"] = ev.block_a;
          j["winner"]["repetend"] = ev.block_b;
          j["evidence"] = {{"block_a", ev.block_a}, {"block_b", ev.block_b}};
        }
      },
      cert.evidence);
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    std::vector<long long> dist = j.at("distances").get<std::vector<long long>>();
    DistanceSet d{std::span<const long long>(dist)};
    const auto& w = j.at("winner");
    RationalSet winner = RationalSet::normalize(w.at("preperiod").get<std::string>(), w.at("repetend").get<std::string>());
    const std::string kind = j.at("kind").get<std::string>();
    const auto& ev = j.at("evidence");
    Evidence evidence;
    if (kind == "RepeatableWindow") {
      std::string window = ev.at("window").get<std::string>();
      require_bits(window, "window");
      if (ev.contains("window_length") && ev.at("window_length").get<std::size_t>() != window.size()) {
        throw std::invalid_argument("window_length does not match window");
      }
      evidence = RepeatableWindowEvidence{window};
    } else if (kind == "SymmetricOffset") {
      std::string window = ev.at("window").get<std::string>();
      require_bits(window, "window");
      evidence = SymmetricOffsetEvidence{ev.at("offset").get<std::size_t>(), window};
    } else if (kind == "TwoBlockInduction") {
      std::string a = ev.at("block_a").get<std::string>();
      std::string b = ev.at("block_b").get<std::string>();
      require_bits(a, "block A");
      require_bits(b, "block B");
      evidence = TwoBlockEvidence{a, b};
    } else {
      throw std::invalid_argument("unknown certificate kind \"" + kind + "\"");
    }
    return Certificate{d, winner, evidence};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace germ
