#pragma once

// Hand-rolled generators for property tests. Fixed seeds keep runs reproducible.

#include <cstddef>
#include <random>
#include <string>

#include "germ/rational_set.hpp"

namespace germ::testing {

inline std::string random_bits(std::mt19937_64& rng, std::size_t n) {
  std::string s(n, '0');
  for (auto& c : s) c = (rng() & 1) ? '1' : '0';
  return s;
}

/// Random D-avoiding string: each position is set with probability 1/2 when allowed.
inline std::string random_avoiding(std::mt19937_64& rng, const DistanceSet& d, std::size_t n) {
  std::string s;
  s.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool free = true;
    for (std::size_t dist : d.values()) {
      if (dist <= i && s[i - dist] == '1') free = false;
    }
    s.push_back(free && (rng() & 1) ? '1' : '0');
  }
  return s;
}

inline RationalSet random_set(std::mt19937_64& rng, std::size_t max_pre = 6, std::size_t max_rep = 6) {
  std::size_t pre = rng() % (max_pre + 1);
  std::size_t rep = 1 + rng() % max_rep;
  return RationalSet::normalize(random_bits(rng, pre), random_bits(rng, rep));
}

}  // namespace germ::testing
