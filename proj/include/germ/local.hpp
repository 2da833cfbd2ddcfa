#pragma once

// Local improvement: replace a patch of length l between two boundary
// contexts by the unique germ-maximal legal filling, and sweep to a fixpoint.

#include <cstddef>
#include <string>
#include <string_view>

#include "germ/rational_set.hpp"

namespace germ {

/// Boundary strings around a patch. |left| = |right| = ||D|| unless
/// `open_left` is set, in which case left may be shorter (down to empty):
/// used for patches touching position 0.
struct PatchContext {
  std::string left;
  std::string right;
  std::size_t length = 0;
  bool open_left = false;
};

/// The germ-maximal G of length ctx.length with left + G + right D-avoiding.
/// Requires length >= max(1, ||D||) and consistent contexts.
std::string gamma(const PatchContext& ctx, const DistanceSet& d);

/// r_t(w): bits [t, t+l) replaced by gamma of the surrounding ||D|| bits.
/// Valid for ||D|| <= t (0 <= t with open_left) and t + l + ||D|| <= |w|.
std::string improve_at(std::string_view w, std::size_t t, std::size_t ell, const DistanceSet& d,
                       bool open_left = false);

enum class Schedule { RoundRobin, ReverseRoundRobin };

struct SweepOptions {
  Schedule schedule = Schedule::RoundRobin;
  bool open_left = false;
};

struct SweepResult {
  std::string bits;
  std::size_t improvements = 0;  // strict improvements applied
  std::size_t passes = 0;        // full passes, including the final quiet one
};

SweepResult sweep_to_fixpoint(std::string_view w, std::size_t ell, const DistanceSet& d,
                              const SweepOptions& options = {});

/// No valid position admits an improving patch.
bool is_locally_maximal(std::string_view w, std::size_t ell, const DistanceSet& d, bool open_left = false);

}  // namespace germ
