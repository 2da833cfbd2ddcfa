#pragma once

// Germ-optimal finite strings by dynamic programming over m-blocks, and
// certificates that an eventually periodic set is the D-winner.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "germ/rational_set.hpp"

namespace germ {

/// Stage k of the block dynamic program: for every D-avoiding block sigma of
/// length m, the germ-optimal D-avoiding string of length k*m ending in
/// sigma (if any). `leading_zeros` forces that many initial zeros, which
/// lets lengths that are not multiples of m be handled by left padding.
struct DpTable {
  std::size_t block = 0;
  std::size_t stage = 0;
  std::size_t leading_zeros = 0;
  std::vector<std::string> suffixes;             // lexicographic
  std::vector<std::optional<std::string>> best;  // aligned with suffixes

  /// Germ-maximal entry; empty when no entry exists.
  std::string overall_best() const;
};

/// Requires ||D|| < m <= 32 and leading_zeros < m.
DpTable dp_init(const DistanceSet& d, std::size_t m, std::size_t leading_zeros = 0);
DpTable dp_step(const DpTable& table, const DistanceSet& d);

/// The unique germ-maximal D-avoiding string of the given length.
std::string best_string(const DistanceSet& d, std::size_t length);
/// best_string for every length 0..max_length (index = length).
std::vector<std::string> best_strings(const DistanceSet& d, std::size_t max_length);

/// RR is D-avoiding. Throws when |R| <= ||D||.
bool is_repeatable(std::string_view r, const DistanceSet& d);

/// Smallest k in (||D||, ||D|| + min D] with i in D iff k - i in D.
std::optional<std::size_t> symmetry_offset(const DistanceSet& d);

enum class CertificateKind { RepeatableWindow, SymmetricOffset, TwoBlockInduction };

std::string kind_name(CertificateKind kind);

struct RepeatableWindowEvidence {
  std::string window;  // best string of its length, repeatable
};

struct SymmetricOffsetEvidence {
  std::size_t offset = 0;
  std::string window;  // best string of length `offset`
};

/// A is germ-maximal at |A|, AB at |A|+|B| (Fact 1); every D-avoiding QR
/// with |Q| = |R| = |B| has R <= B or QR <= BB (Fact 2). The winner is
/// A B B B ...
struct TwoBlockEvidence {
  std::string block_a;
  std::string block_b;
};

using Evidence = std::variant<RepeatableWindowEvidence, SymmetricOffsetEvidence, TwoBlockEvidence>;

struct Certificate {
  DistanceSet distances;
  RationalSet winner;  // canonical
  Evidence evidence;

  CertificateKind kind() const { return static_cast<CertificateKind>(evidence.index()); }
};

/// Replays the evidence from scratch; true iff it proves `winner`.
bool verify(const Certificate& cert);

std::optional<Certificate> find_repeatable_winner(const DistanceSet& d, std::size_t m_max);
std::optional<Certificate> winner_symmetric(const DistanceSet& d);

/// A counterexample (Q, R) to Fact 2 for block B, or nullopt when it holds.
std::optional<std::pair<std::string, std::string>> fact2_counterexample(const DistanceSet& d, std::string_view b);

std::optional<Certificate> certify_two_block(const DistanceSet& d, std::string_view a, std::string_view b);

struct SearchBudget {
  std::size_t m_max = 0;       // repeatable-window scan limit; 0 means 4*||D||
  std::size_t block_max = 0;   // longest B tried; 0 means 2*||D|| + 2
  std::size_t prefix_max = 0;  // longest A tried; 0 means 4*block_max
};

struct SearchOutcome {
  std::optional<Certificate> certificate;
  std::string diagnostic;  // why the search was inconclusive
};

/// Symmetric shortcut, then repeatable-window scan, then two-block search.
/// An empty result is "inconclusive", not a proof that no winner exists.
SearchOutcome winner(const DistanceSet& d, const SearchBudget& budget = {});

nlohmann::json set_to_json(const RationalSet& s);
nlohmann::json to_json(const Certificate& cert);
/// Throws std::invalid_argument on schema violations. Does not verify.
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace germ
