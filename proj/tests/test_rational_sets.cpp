#include <doctest.h>

#include <random>

#include "germ/rational_set.hpp"
#include "support.hpp"

using namespace germ;

namespace {

// Direct pairwise check over an explicit prefix; shares nothing with is_avoiding.
bool pairwise_avoiding(const RationalSet& s, const DistanceSet& d, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s.contains(i) && s.contains(j) && d.contains(j - i)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("normalize produces canonical forms") {
  auto a = RationalSet::normalize("", "1010");
  CHECK(a.preperiod() == "");
  CHECK(a.repetend() == "10");
  auto b = RationalSet::normalize("1", "01");
  CHECK(b.preperiod() == "");
  CHECK(b.repetend() == "10");
  auto c = RationalSet::normalize("111", "0");
  CHECK(c.preperiod() == "111");
  CHECK(c.repetend() == "0");
  CHECK(RationalSet::normalize("110000", "100100").to_string() == "1100|001");
  CHECK_THROWS_AS(RationalSet::normalize("1", ""), std::invalid_argument);
  CHECK_THROWS_AS(RationalSet::normalize("2", "1"), std::invalid_argument);
  CHECK_THROWS_AS(RationalSet::parse("1010"), std::invalid_argument);
  CHECK(RationalSet::parse("0|10") == RationalSet::periodic("01"));
}

TEST_CASE("normalize is idempotent and preserves membership") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 1000; ++it) {
    std::string pre = testing::random_bits(rng, rng() % 7);
    std::string rep = testing::random_bits(rng, 1 + rng() % 6);
    std::size_t copies = 1 + rng() % 3;
    std::string big_rep;
    for (std::size_t k = 0; k < copies; ++k) big_rep += rep;
    RationalSet s = RationalSet::normalize(pre, big_rep);
    CHECK(RationalSet::normalize(s.preperiod(), s.repetend()) == s);
    for (std::size_t n = 0; n < 40; ++n) {
      bool expect = n < pre.size() ? pre[n] == '1' : big_rep[(n - pre.size()) % big_rep.size()] == '1';
      CHECK(s.contains(n) == expect);
    }
    CHECK(s.period() <= rep.size());
  }
}

TEST_CASE("gen_fun closed forms") {
  CHECK(gen_fun(RationalSet::periodic("10")).same_germ(RationalGF(IntPolynomial{1}, 2)));
  for (std::size_t d = 1; d <= 6; ++d) {
    for (std::size_t a = 0; a < 8; ++a) {
      std::string rep(d, '0');
      rep[0] = '1';
      RationalSet s = RationalSet::normalize(std::string(a, '0'), rep);
      CHECK(gen_fun(s).same_germ(RationalGF(IntPolynomial::monomial(a), d)));
    }
  }
  RationalGF fin = gen_fun(RationalSet::normalize("0111", "0"));
  CHECK(fin.same_germ(RationalGF(IntPolynomial{0, 1, 1, 1} * IntPolynomial{1, -1}, 1)));
  CHECK(germ_compare(fin, RationalGF(IntPolynomial{0, 1, 1, 1} * IntPolynomial{1, -1}, 1)) == 0);
}

TEST_CASE("is_avoiding on strings and sets") {
  DistanceSet d35{3, 5};
  CHECK(is_avoiding("10101010", d35));
  CHECK_FALSE(is_avoiding("111000111000", d35));
  CHECK_FALSE(is_avoiding(RationalSet::naturals(), DistanceSet{1}));
  CHECK(is_avoiding(RationalSet::naturals(), DistanceSet{}));
  CHECK(is_avoiding(RationalSet::periodic("11100000"), d35));
  CHECK_FALSE(is_avoiding(RationalSet::periodic("111000"), d35));
}

TEST_CASE("is_avoiding on sets agrees with pairwise checking") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 1000; ++it) {
    RationalSet s = testing::random_set(rng);
    std::vector<long long> raw;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) raw.push_back(1 + static_cast<long long>(rng() % 9));
    DistanceSet d{std::span<const long long>(raw)};
    std::size_t n = 4 * (s.preperiod().size() + s.period() + d.norm());
    CHECK(is_avoiding(s, d) == pairwise_avoiding(s, d, n));
  }
}

TEST_CASE("DistanceSet parsing and normalization") {
  DistanceSet d = DistanceSet::parse("5,3,5");
  CHECK(d.to_string() == "3,5");
  CHECK(d.norm() == 5);
  CHECK(DistanceSet::parse("").empty());
  CHECK(DistanceSet::parse("").norm() == 0);
  CHECK_THROWS_AS(DistanceSet::parse("3,-1"), std::invalid_argument);
  CHECK_THROWS_AS(DistanceSet::parse("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(DistanceSet::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(DistanceSet::parse("3,,5"), std::invalid_argument);
  CHECK_THROWS_AS(DistanceSet::parse("2.5"), std::invalid_argument);
}

TEST_CASE("greedy construction and period detection") {
  GreedyResult g35 = greedy(DistanceSet{3, 5}, 24);
  CHECK(g35.bits == "111000001110000011100000");
  REQUIRE(g35.detected);
  CHECK(*g35.detected == RationalSet::periodic("11100000"));

  GreedyResult g235 = greedy(DistanceSet{2, 3, 5}, 21);
  REQUIRE(g235.detected);
  CHECK(*g235.detected == RationalSet::periodic("1100000"));

  GreedyResult g12 = greedy(DistanceSet{1, 2}, 9);
  REQUIRE(g12.detected);
  CHECK(*g12.detected == RationalSet::periodic("100"));

  GreedyResult empty = greedy(DistanceSet{}, 3);
  REQUIRE(empty.detected);
  CHECK(*empty.detected == RationalSet::naturals());

  // too short a horizon to see the state recur
  CHECK_FALSE(greedy(DistanceSet{3, 5}, 5).detected);
  CHECK_THROWS(greedy(DistanceSet{1}, 0));
}

TEST_CASE("greedy output is prefix-stable") {
  for (const char* text : {"1", "3,5", "2,4,7", "4,7,11", "1,3,6,8"}) {
    DistanceSet d = DistanceSet::parse(text);
    std::string prev = greedy(d, 1).bits;
    for (std::size_t n = 2; n <= 60; ++n) {
      std::string cur = greedy(d, n).bits;
      CHECK(cur.substr(0, n - 1) == prev);
      CHECK(is_avoiding(cur, d));
      prev = cur;
    }
  }
}

TEST_CASE("shift and the valuation shift law") {
  RationalSet evens = RationalSet::periodic("10");
  CHECK(shift(evens, 1) == RationalSet::periodic("01"));
  CHECK(shift(evens, 0) == evens);
  Valuation ve = valuation(evens);
  CHECK(ve.density() == mpq_class(1, 2));
  CHECK(ve.a0() == mpq_class(1, 4));
  Valuation vo = valuation(shift(evens, 1));
  CHECK(vo.density() == mpq_class(1, 2));
  CHECK(vo.a0() == mpq_class(-1, 4));

  std::mt19937_64 rng(3);
  for (int it = 0; it < 1000; ++it) {
    RationalSet s = testing::random_set(rng);
    std::size_t t = rng() % 5;
    RationalSet st = shift(s, t);
    CHECK(gen_fun(st).same_germ(RationalGF(gen_fun(s).numerator.shifted(t), gen_fun(s).period)));
    Valuation v = valuation(s), vs = valuation(shift(s, 1));
    CHECK(vs.density() == v.density());
    CHECK(vs.a0() == v.a0() - v.density());
    if (!s.is_empty()) CHECK(set_compare(s, shift(s, 1)) > 0);
  }
}

TEST_CASE("valuation values and classification") {
  for (std::size_t d = 1; d <= 8; ++d) {
    for (std::size_t a = 0; a < 10; ++a) {
      std::string rep(d, '0');
      rep[0] = '1';
      Valuation v = valuation(RationalSet::normalize(std::string(a, '0'), rep));
      CHECK(v.density() == mpq_class(1, d));
      mpq_class expect(static_cast<long>(d) - 1 - 2 * static_cast<long>(a), 2 * d);
      expect.canonicalize();
      CHECK(v.a0() == expect);
    }
  }
  Valuation s1 = valuation(RationalSet::finite("0001001001001001001"));  // {3,6,...,18}
  Valuation s2 = valuation(RationalSet::finite("0101001001000001001"));  // {1,3,6,9,15,18}
  CHECK(s1.density() == 0);
  CHECK(s1.a0() == 6);
  CHECK(s1 == s2);
  Valuation e = valuation(RationalSet());
  CHECK(e.density() == 0);
  CHECK(e.a0() == 0);
  CHECK_THROWS_AS(Valuation(mpq_class(0), mpq_class(1, 2)), std::logic_error);
  CHECK_THROWS_AS(Valuation(mpq_class(1), mpq_class(1)), std::logic_error);
  CHECK_THROWS_AS(Valuation(mpq_class(3, 2), mpq_class(0)), std::logic_error);

  std::mt19937_64 rng(4);
  for (int it = 0; it < 1000; ++it) {
    RationalSet s = testing::random_set(rng);
    Valuation v = valuation(s);  // construction enforces the classes
    if (v.density() == 0) CHECK(s.is_finite());
    if (v.density() == 1) CHECK(s.repetend() == "1");
  }
}

TEST_CASE("set_compare") {
  RationalSet evens = RationalSet::periodic("10"), odds = RationalSet::periodic("01");
  CHECK(set_compare(evens, odds) > 0);
  CHECK(set_compare(odds, RationalSet::periodic("11100000")) > 0);
  CHECK(set_compare(RationalSet::normalize("1010", "1010"), evens) == 0);

  std::mt19937_64 rng(5);
  for (int it = 0; it < 1000; ++it) {
    RationalSet s = testing::random_set(rng), t = testing::random_set(rng);
    auto o = set_compare(s, t);
    CHECK((o == 0) == (s == t));
    if (o > 0) CHECK(valuation(s).density() >= valuation(t).density());
    if (o > 0) CHECK(valuation(s) >= valuation(t));
  }
}
