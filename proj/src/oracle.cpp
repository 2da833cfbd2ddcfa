#include "germ/oracle.hpp"

#include <iostream>
#include <stdexcept>

namespace germ::oracle {

namespace {

void check_cap(std::size_t value, std::size_t cap, bool allow, const char* what) {
  if (value <= cap) return;
  if (!allow) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(value) + " exceeds oracle cap " + std::to_string(cap));
  }
  std::clog << "warning: oracle " << what << " " << value << " exceeds cap " << cap << "; enumeration may be slow\n";
}

void extend(const DistanceSet& d, std::size_t n, std::string& cur, const std::function<void(const std::string&)>& visit) {
  if (cur.size() == n) {
    visit(cur);
    return;
  }
  cur.push_back('0');
  extend(d, n, cur, visit);
  cur.back() = '1';
  const std::size_t pos = cur.size() - 1;
  bool ok = true;
  for (std::size_t dist : d.values()) {
    if (dist > pos) break;
    if (cur[pos - dist] == '1') {
      ok = false;
      break;
    }
  }
  if (ok) extend(d, n, cur, visit);
  cur.pop_back();
}

}  // namespace

void enumerate_avoiding(const DistanceSet& d, std::size_t n, const std::function<void(const std::string&)>& visit) {
  std::string cur;
  cur.reserve(n);
  extend(d, n, cur, visit);
}

std::vector<std::string> enumerate_avoiding(const DistanceSet& d, std::size_t n) {
  std::vector<std::string> out;
  enumerate_avoiding(d, n, [&](const std::string& s) { out.push_back(s); });
  return out;
}

std::string brute_best(const DistanceSet& d, std::size_t n, const Caps& caps) {
  check_cap(n, caps.max_length, caps.allow_exceed, "length");
  std::string best;
  bool have = false;
  enumerate_avoiding(d, n, [&](const std::string& s) {
    if (!have || bits_germ_compare(s, best) > 0) {
      best = s;
      have = true;
    }
  });
  return best;
}

RationalSet brute_best_periodic(const DistanceSet& d, std::size_t max_period, const Caps& caps) {
  if (max_period == 0) throw std::invalid_argument("max_period must be positive");
  check_cap(max_period, caps.max_period, caps.allow_exceed, "period");
  RationalSet best;  // empty set is always a contender
  for (std::size_t p = 1; p <= max_period; ++p) {
    enumerate_avoiding(d, p, [&](const std::string& r) {
      RationalSet s = RationalSet::periodic(r);
      if (s.period() != p) return;  // seen at a shorter period
      if (!is_avoiding(s, d)) return;
      if (set_compare(s, best) > 0) best = s;
    });
  }
  return best;
}

}  // namespace germ::oracle
