#pragma once

// Brute-force ground truth by exhaustive enumeration. Deliberately independent
// of the dynamic program: the only shared piece is the germ comparator.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "germ/rational_set.hpp"

namespace germ::oracle {

struct Caps {
  std::size_t max_length = 32;
  std::size_t max_period = 24;
  /// Exceeding a cap throws unless this is set, in which case a warning is
  /// written to std::clog.
  bool allow_exceed = false;
};

/// Visits every D-avoiding string of length n in lexicographic order.
void enumerate_avoiding(const DistanceSet& d, std::size_t n, const std::function<void(const std::string&)>& visit);
std::vector<std::string> enumerate_avoiding(const DistanceSet& d, std::size_t n);

/// Germ-maximal D-avoiding string of length n.
std::string brute_best(const DistanceSet& d, std::size_t n, const Caps& caps = {});

/// Germ-maximal purely periodic D-avoiding set with period <= max_period.
RationalSet brute_best_periodic(const DistanceSet& d, std::size_t max_period, const Caps& caps = {});

}  // namespace germ::oracle
