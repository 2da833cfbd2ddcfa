#include "germ/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace germ {

Letter::Letter(std::string bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("letter must have block length >= 1");
  require_bits(bits_, "letter");
}

std::vector<Letter> block_encode(std::string_view bits, std::size_t m) {
  if (m == 0) throw std::invalid_argument("block length must be >= 1");
  if (bits.size() < m) throw std::invalid_argument("input shorter than the block length");
  std::vector<Letter> out;
  out.reserve(bits.size() - m + 1);
  for (std::size_t n = 0; n + m <= bits.size(); ++n) out.emplace_back(std::string(bits.substr(n, m)));
  return out;
}

std::vector<Letter> block_encode(const RationalSet& s, std::size_t m, std::size_t count) {
  if (m == 0) throw std::invalid_argument("block length must be >= 1");
  if (count == 0) return {};
  return block_encode(s.prefix(count + m - 1), m);
}

bool is_legal(const Letter& letter, const DistanceSet& d) {
  if (letter.size() < d.norm() + 1) {
    throw std::invalid_argument("block length " + std::to_string(letter.size()) + " below ||D||+1 is unsupported");
  }
  return is_avoiding(letter.bits(), d);
}

bool is_successor(const Letter& a, const Letter& b) {
  if (a.size() != b.size()) throw std::invalid_argument("letters of different block length");
  return std::string_view(a.bits()).substr(1) == std::string_view(b.bits()).substr(0, b.size() - 1);
}

CircularWord::CircularWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.size() < 2) throw std::invalid_argument("circular word needs length >= 1");
  if (letters_.front() != letters_.back()) throw std::invalid_argument("circular word must start and end with the same letter");
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (!is_successor(letters_[i - 1], letters_[i])) {
      throw std::invalid_argument("consecutive letters violate the successor relation");
    }
  }
}

std::string CircularWord::consonant_pattern() const {
  std::string out(length(), '0');
  for (std::size_t i = 0; i < length(); ++i) out[i] = letters_[i].consonant() ? '1' : '0';
  return out;
}

Decomposition circ_decompose(std::span<const Letter> w, std::optional<Letter> anchor) {
  if (!anchor) {
    for (std::size_t i = 0; i < w.size() && !anchor; ++i) {
      if (std::find(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), w[i]) != w.end()) anchor = w[i];
    }
    if (!anchor) throw std::invalid_argument("no letter recurs within the window");
  }
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == *anchor) hits.push_back(i);
  }
  if (hits.size() < 2) throw std::invalid_argument("anchor occurs fewer than twice");

  Decomposition out{{w.begin(), w.begin() + static_cast<std::ptrdiff_t>(hits.front())}, {}, {}, *anchor};
  for (std::size_t k = 1; k < hits.size(); ++k) {
    out.words.emplace_back(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(hits[k - 1]),
                                               w.begin() + static_cast<std::ptrdiff_t>(hits[k]) + 1));
  }
  out.tail.assign(w.begin() + static_cast<std::ptrdiff_t>(hits.back()) + 1, w.end());
  return out;
}

CircularWord circ_concat(const CircularWord& c, const CircularWord& d) {
  if (c.letters().back() != d.letters().front()) throw std::invalid_argument("circular words do not share the junction letter");
  std::vector<Letter> letters(c.letters().begin(), c.letters().end() - 1);
  letters.insert(letters.end(), d.letters().begin(), d.letters().end());
  return CircularWord(std::move(letters));
}

RationalGF circ_germ(const CircularWord& c) {
  return RationalGF(IntPolynomial::from_bits(c.consonant_pattern()), c.length());
}

std::strong_ordering circ_compare(const CircularWord& c, const CircularWord& d) {
  return germ_compare(circ_germ(c), circ_germ(d));
}

}  // namespace germ
