#include <doctest.h>

#include <random>

#include "germ/local.hpp"
#include "germ/oracle.hpp"
#include "germ/search.hpp"
#include "support.hpp"

using namespace germ;

namespace {

PatchContext ctx(std::string left, std::string right, std::size_t ell, bool open_left = false) {
  return PatchContext{std::move(left), std::move(right), ell, open_left};
}

// Brute force over all fillings; independent of the keyed DP inside gamma.
std::string brute_gamma(const PatchContext& c, const DistanceSet& d) {
  std::string top;
  for (std::size_t mask = 0; mask < (std::size_t{1} << c.length); ++mask) {
    std::string g(c.length, '0');
    for (std::size_t i = 0; i < c.length; ++i) {
      if (mask >> (c.length - 1 - i) & 1) g[i] = '1';
    }
    if (!is_avoiding(c.left + g + c.right, d)) continue;
    if (top.empty() || bits_germ_compare(g, top) > 0) top = g;
  }
  return top;
}

}  // namespace

TEST_CASE("gamma reference values") {
  DistanceSet d{3, 5};
  CHECK(gamma(ctx("00000", "00000", 5), d) == "11100");
  CHECK(gamma(ctx("10101", "10101", 5), d) == "01010");
  CHECK(gamma(ctx("", "", 4), DistanceSet{}) == "1111");
  CHECK(gamma(ctx("", "00000", 5, true), d) == "11100");

  CHECK_THROWS_AS(gamma(ctx("0000", "00000", 5), d), std::invalid_argument);
  CHECK_THROWS_AS(gamma(ctx("00000", "00000", 4), d), std::invalid_argument);
  CHECK_THROWS_AS(gamma(ctx("10010", "00000", 5), d), std::invalid_argument);
}

TEST_CASE("gamma agrees with brute force") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 300; ++it) {
    std::vector<long long> raw;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) raw.push_back(1 + static_cast<long long>(rng() % 6));
    DistanceSet d{std::span<const long long>(raw)};
    std::size_t n = d.norm();
    std::size_t ell = n + rng() % 4;
    std::string w = testing::random_avoiding(rng, d, 2 * n + ell);
    PatchContext c = ctx(w.substr(0, n), w.substr(n + ell), ell);
    CHECK(gamma(c, d) == brute_gamma(c, d));
  }
}

TEST_CASE("improve_at") {
  DistanceSet d{3, 5};
  const std::string odds = "01010101010101010101";
  CHECK(improve_at(odds, 6, 5, d) == odds);
  const std::string zeros(20, '0');
  std::string up = improve_at(zeros, 6, 5, d);
  CHECK(up == "00000011100000000000");
  CHECK(bits_germ_compare(up, zeros) > 0);
  CHECK(improve_at(up, 6, 5, d) == up);
  CHECK_THROWS_AS(improve_at(zeros, 4, 5, d), std::out_of_range);
  CHECK_THROWS_AS(improve_at(zeros, 11, 5, d), std::out_of_range);
  CHECK(improve_at(zeros, 0, 5, d, true).substr(0, 5) == "11100");
}

TEST_CASE("improve_at is monotone and idempotent") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 500; ++it) {
    DistanceSet d = (it % 2) ? DistanceSet{3, 5} : DistanceSet{2, 4, 7};
    std::size_t ell = d.norm() + rng() % 3;
    std::string w = testing::random_avoiding(rng, d, 40);
    std::size_t t = d.norm() + rng() % (40 - 2 * d.norm() - ell + 1);
    std::string r = improve_at(w, t, ell, d);
    CHECK(is_avoiding(r, d));
    CHECK(bits_germ_compare(r, w) >= 0);
    if (r != w) CHECK(bits_germ_compare(r, w) > 0);
    CHECK(improve_at(r, t, ell, d) == r);
  }
}

TEST_CASE("sweep_to_fixpoint") {
  DistanceSet d{3, 5};
  const std::string odds = "01010101010101010101";
  SweepResult same = sweep_to_fixpoint(odds, 5, d);
  CHECK(same.bits == odds);
  CHECK(same.improvements == 0);
  CHECK(same.passes == 1);

  std::mt19937_64 rng(43);
  for (Schedule s : {Schedule::RoundRobin, Schedule::ReverseRoundRobin}) {
    for (int it = 0; it < 40; ++it) {
      std::string w = testing::random_avoiding(rng, d, 36);
      SweepResult r = sweep_to_fixpoint(w, 5, d, SweepOptions{s, false});
      CHECK(is_avoiding(r.bits, d));
      CHECK(bits_germ_compare(r.bits, w) >= 0);
      CHECK((r.bits == w) == (r.improvements == 0));
      CHECK(is_locally_maximal(r.bits, 5, d));
    }
  }
  CHECK(sweep_to_fixpoint("11", 5, d).bits == "11");
  CHECK_THROWS_AS(sweep_to_fixpoint("1001", 5, d), std::invalid_argument);
}

TEST_CASE("open-left sweeps reach the best string on short inputs") {
  // with ell >= |w| - ||D|| a single patch covers everything but the right context
  DistanceSet d{1, 2};
  std::string w(8, '0');
  SweepResult r = sweep_to_fixpoint(w, 6, d, SweepOptions{Schedule::RoundRobin, true});
  CHECK(r.bits == "10010000");
  CHECK(r.bits.substr(0, 6) == oracle::brute_best(d, 6));
}

TEST_CASE("certified winners are window-consistent") {
  for (const char* text : {"3,5", "1,2", "1,3,6,8", "2,4,7", "2,4,13", "2,3,6"}) {
    DistanceSet d = DistanceSet::parse(text);
    SearchOutcome res = winner(d);
    REQUIRE(res.certificate);
    const RationalSet& s = res.certificate->winner;
    const std::size_t n = d.norm(), ell = n;
    const std::size_t span = s.preperiod().size() + s.period();
    const std::string w = s.prefix(span + ell + 3 * n);
    for (std::size_t t = n; t <= span + n; ++t) {
      PatchContext c = ctx(w.substr(t - n, n), w.substr(t + ell, n), ell);
      CHECK(w.substr(t, ell) == gamma(c, d));
    }
  }
}
