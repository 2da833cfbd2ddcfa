#include "germ/local.hpp"

#include <map>
#include <stdexcept>

namespace germ {

namespace {

void require_patch_length(std::size_t ell, const DistanceSet& d) {
  if (ell == 0 || ell < d.norm()) throw std::invalid_argument("patch length must be >= max(1, ||D||)");
}

std::size_t first_position(const DistanceSet& d, bool open_left) { return open_left ? 0 : d.norm(); }

}  // namespace

std::string gamma(const PatchContext& ctx, const DistanceSet& d) {
  const std::size_t norm = d.norm();
  require_patch_length(ctx.length, d);
  require_bits(ctx.left, "left context");
  require_bits(ctx.right, "right context");
  if (ctx.right.size() != norm || (ctx.open_left ? ctx.left.size() > norm : ctx.left.size() != norm)) {
    throw std::invalid_argument("context strings must have length ||D||");
  }
  if (!is_avoiding(ctx.left, d) || !is_avoiding(ctx.right, d)) {
    throw std::invalid_argument("context strings must be D-avoiding");
  }

  // Work in the frame left + patch; a candidate extends by one bit at a time,
  // keyed by its last ||D|| bits, keeping the germ-best patch per key.
  const std::size_t off = ctx.left.size();
  std::map<std::string, std::string> frontier{{ctx.left.substr(off - std::min(off, norm)), std::string()}};
  for (std::size_t i = 0; i < ctx.length; ++i) {
    std::map<std::string, std::string> next;
    for (const auto& [key, patch] : frontier) {
      const std::string frame = ctx.left + patch;
      for (char bit : {'0', '1'}) {
        if (bit == '1') {
          const std::size_t pos = off + i;
          bool ok = true;
          for (std::size_t dist : d.values()) {
            if (dist > pos) break;
            if (frame[pos - dist] == '1') {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
        }
        std::string ext = patch + bit;
        std::string tail = (ctx.left + ext);
        tail = tail.substr(tail.size() - std::min(tail.size(), norm));
        auto it = next.find(tail);
        if (it == next.end()) next.emplace(std::move(tail), std::move(ext));
        else if (bits_germ_compare(ext, it->second) > 0) it->second = std::move(ext);
      }
    }
    frontier = std::move(next);
  }
  const std::string* top = nullptr;
  for (const auto& [key, patch] : frontier) {
    if (!is_avoiding(key + ctx.right, d)) continue;
    if (top == nullptr || bits_germ_compare(patch, *top) > 0) top = &patch;
  }
  if (top == nullptr) throw std::logic_error("no legal filling for the patch");
  return *top;
}

std::string improve_at(std::string_view w, std::size_t t, std::size_t ell, const DistanceSet& d, bool open_left) {
  const std::size_t norm = d.norm();
  require_patch_length(ell, d);
  if (t < first_position(d, open_left) || t + ell + norm > w.size()) {
    throw std::out_of_range("patch position " + std::to_string(t) + " out of range");
  }
  PatchContext ctx;
  ctx.left = std::string(w.substr(t - std::min(t, norm), std::min(t, norm)));
  ctx.right = std::string(w.substr(t + ell, norm));
  ctx.length = ell;
  ctx.open_left = open_left;
  std::string out(w);
  out.replace(t, ell, gamma(ctx, d));
  return out;
}

SweepResult sweep_to_fixpoint(std::string_view w, std::size_t ell, const DistanceSet& d, const SweepOptions& options) {
  require_patch_length(ell, d);
  require_bits(w);
  if (!is_avoiding(w, d)) throw std::invalid_argument("sweep input must be D-avoiding");
  SweepResult res{std::string(w), 0, 0};
  const std::size_t lo = first_position(d, options.open_left);
  if (w.size() < lo + ell + d.norm()) return res;
  const std::size_t hi = w.size() - ell - d.norm();  // inclusive
  bool changed = true;
  while (changed) {
    changed = false;
    ++res.passes;
    for (std::size_t k = 0; k <= hi - lo; ++k) {
      std::size_t t = options.schedule == Schedule::RoundRobin ? lo + k : hi - k;
      std::string next = improve_at(res.bits, t, ell, d, options.open_left);
      if (next != res.bits) {
        if (bits_germ_compare(next, res.bits) <= 0) throw std::logic_error("local replacement decreased the germ");
        res.bits = std::move(next);
        ++res.improvements;
        changed = true;
      }
    }
  }
  return res;
}

bool is_locally_maximal(std::string_view w, std::size_t ell, const DistanceSet& d, bool open_left) {
  require_patch_length(ell, d);
  const std::size_t lo = first_position(d, open_left);
  for (std::size_t t = lo; t + ell + d.norm() <= w.size(); ++t) {
    if (improve_at(w, t, ell, d, open_left) != w) return false;
  }
  return true;
}

}  // namespace germ
