#pragma once

// m-block coding of indicator sequences, circular words, and the ":"
// concatenation at a shared junction letter.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "germ/poly.hpp"
#include "germ/rational_set.hpp"

namespace germ {

/// A window (b_n, ..., b_{n+m-1}) of an indicator sequence. Consonant iff the
/// first bit is 1.
class Letter {
 public:
  explicit Letter(std::string bits);

  const std::string& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool consonant() const { return bits_.front() == '1'; }
  bool vowel() const { return !consonant(); }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;

 private:
  std::string bits_;
};

/// Windows of length m at every start position 0 .. |bits|-m.
std::vector<Letter> block_encode(std::string_view bits, std::size_t m);
/// The first `count` letters of the m-block encoding of an infinite set.
std::vector<Letter> block_encode(const RationalSet& s, std::size_t m, std::size_t count);

/// Requires m >= ||D|| + 1; shorter blocks are rejected.
bool is_legal(const Letter& letter, const DistanceSet& d);
bool is_successor(const Letter& a, const Letter& b);

/// Letter sequence whose first and last letters coincide. Its length counts
/// the junction letter once.
class CircularWord {
 public:
  explicit CircularWord(std::vector<Letter> letters);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size() - 1; }
  const Letter& junction() const { return letters_.front(); }
  /// Consonant indicator of the first length() letters.
  std::string consonant_pattern() const;

  friend bool operator==(const CircularWord&, const CircularWord&) = default;

 private:
  std::vector<Letter> letters_;
};

struct Decomposition {
  std::vector<Letter> prefix;
  std::vector<CircularWord> words;  // primitive: anchor only at the ends
  std::vector<Letter> tail;         // letters after the last anchor occurrence
  Letter anchor;
};

/// w = prefix : c_1 : c_2 : ... at the given anchor, or at the first letter
/// that recurs within the window.
Decomposition circ_decompose(std::span<const Letter> w, std::optional<Letter> anchor = std::nullopt);

CircularWord circ_concat(const CircularWord& c, const CircularWord& d);

/// |c| = P_c(q) / (1 - q^a).
RationalGF circ_germ(const CircularWord& c);

std::strong_ordering circ_compare(const CircularWord& c, const CircularWord& d);

}  // namespace germ
