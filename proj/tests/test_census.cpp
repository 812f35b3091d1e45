#include <cmath>
#include <map>

#include "doctest.h"
#include "rank74/census.hpp"
#include "rank74/error.hpp"

using namespace rank74;

namespace {
  bool literal(Word const& w, CensusPattern p) {
    std::size_t m = pattern_length(p);
    for (std::size_t k = 0; k + m <= w.size(); ++k) {
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) {
        auto const& g = w[k + i];
        ok = g.letter == Letter::Y && !g.left && (p == CensusPattern::Y0sY0s || !g.right);
      }
      if (ok)
        return true;
    }
    return false;
  }
}  // namespace

TEST_CASE("recurrence reproduces the anchor values") {
  auto t = recurrence_table(25);
  CHECK(t.rows[0].avoiding == 6);
  CHECK(t.rows[1].avoiding == 17);
  CHECK(t.rows[1].terminal == 1);
  CHECK(t.rows[2].terminal == 5);
  CHECK(t.rows[2].avoiding == 46);
  CHECK(t.rows[2].total == 54);
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.rows[i].total == 3 * t.rows[i - 1].total);
    CHECK(t.rows[i].avoiding + t.rows[i].terminal == 3 * t.rows[i - 1].avoiding);
  }
  CHECK(std::abs(t.rows[24].ratio - (1 + std::sqrt(3.0))) < 1e-3);
  // 1 - P_n never grows
  for (std::size_t i = 3; i < t.rows.size(); ++i)
    CHECK(t.rows[i].probability >= t.rows[i - 1].probability);
  CHECK(t.to_csv().rfind("n,E_n,E'_n,E''_n,prob_num,prob_den,prob_float\n", 0) == 0);
  CHECK(t.to_csv().find("\n3,54,46,5,") != std::string::npos);
  CHECK_THROWS_AS(recurrence_table(2), Error);

  auto o = recurrence_table(10, CensusPattern::omega0);
  CHECK(o.rows[2].terminal == 1);
  CHECK(o.derivation.find("b_{n+3} + b_{n+2} + b_{n+1} = a_n") != std::string::npos);
}

TEST_CASE("growth constants") {
  auto g = growth_constants(CensusPattern::Y00Y00);
  CHECK(g.exact_roots);
  REQUIRE(g.roots.size() == 2);
  CHECK(g.roots[0].real() == doctest::Approx(1 + std::sqrt(3.0)));
  CHECK(g.roots[1].real() == doctest::Approx(1 - std::sqrt(3.0)));
  CHECK(g.g_prime < 2.74);
  CHECK(2.74 < g.g);
  auto o = growth_constants(CensusPattern::omega0);
  CHECK(o.roots.size() == 3);
  CHECK(o.g_prime > g.g_prime);
  CHECK(o.g_prime < 3);
  double x = o.g_prime;
  CHECK(x * x * x == doctest::Approx(2 * x * x + 2 * x + 2));
}

TEST_CASE("class containment matches a brute-force closure") {
  auto gens = standard_generators();
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Word> words{{}};
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Word> next;
      for (auto const& w : words)
        for (auto const& g : gens) {
          auto v = w;
          v.push_back(g);
          next.push_back(std::move(v));
        }
      words = std::move(next);
    }
    for (auto p : {CensusPattern::Y00Y00, CensusPattern::Y0sY0s, CensusPattern::omega0}) {
      std::map<CanonicalWord, bool> oracle;
      for (auto const& w : words) {
        auto& slot = oracle[canonicalize(w)];
        slot       = slot || literal(w, p);
      }
      CHECK(oracle.size() == 2 * std::size_t(std::pow(3, n)));
      for (auto const& [c, has] : oracle) {
        CAPTURE(c.str());
        CHECK(contains_pattern(c, p, Semantics::class_) == has);
        CHECK(contains_pattern(c, p, Semantics::representative) == literal(c.representative(), p));
      }
    }
  }
}

TEST_CASE("enumerate_counts") {
  for (std::size_t n = 1; n <= 12; ++n) {
    auto c = enumerate_counts(n, CensusPattern::Y00Y00, Semantics::class_);
    CHECK(c.total == 2 * BigInt(pow(BigInt(3), unsigned(n))));
    CHECK(c.total == c.avoiding + c.containing);
  }
  auto one = enumerate_counts(1, CensusPattern::Y00Y00, Semantics::class_);
  CHECK(one.avoiding == 6);
  auto two = enumerate_counts(2, CensusPattern::Y00Y00, Semantics::class_);
  CHECK(two.avoiding == 17);
  CHECK(two.containing == 1);
  CHECK(two.terminal == 1);
  CHECK_THROWS_AS(enumerate_counts(13, CensusPattern::Y00Y00, Semantics::class_), BoundExceeded);
  CHECK_THROWS_AS(enumerate_counts(0, CensusPattern::Y00Y00, Semantics::class_), Error);
}

TEST_CASE("uniform_sample") {
  SUBCASE("deterministic") {
    CHECK(uniform_sample(7, 42) == uniform_sample(7, 42));
    CHECK(uniform_sample(5, 1).valid());
  }
  SUBCASE("n = 1 frequencies") {
    std::map<CanonicalWord, std::size_t> freq;
    std::size_t const                    N = 60000;
    for (std::size_t i = 0; i < N; ++i)
      ++freq[uniform_sample(1, trial_seed(3, i))];
    CHECK(freq.size() == 6);
    double sigma = std::sqrt(N * (1.0 / 6) * (5.0 / 6));
    for (auto const& [c, k] : freq)
      CHECK(std::abs(double(k) - N / 6.0) < 3 * sigma);
  }
  SUBCASE("n = 4 chi-square against the full list") {
    auto                                 all = canonical_words(4);
    std::map<CanonicalWord, std::size_t> idx;
    for (std::size_t i = 0; i < all.size(); ++i)
      idx[all[i]] = i;
    std::vector<std::size_t> counts(all.size());
    for (std::size_t i = 0; i < 162 * 200; ++i) {
      auto w = uniform_sample(4, trial_seed(2026, i));
      REQUIRE(idx.count(w));
      ++counts[idx[w]];
    }
    CHECK(chi_square_uniform(counts) > 0.01);
  }
}

TEST_CASE("monte_carlo") {
  auto e = monte_carlo(2, 10000, "exprank-pattern-a", 1);
  CHECK(e.lower <= 1.0 / 18);
  CHECK(1.0 / 18 <= e.upper);
  CHECK(e.lower <= e.point);
  CHECK(e.point <= e.upper);
  auto again = monte_carlo(2, 10000, "exprank-pattern-a", 1);
  CHECK(again.hits == e.hits);
  CHECK_THROWS_AS(monte_carlo(2, 0, "exprank-pattern-a", 1), Error);
  CHECK_THROWS_AS(monte_carlo(2, 5, "nonsense", 1), Error);

  // exp rank is at least as likely as the pattern event
  auto lb = enumerate_counts(6, CensusPattern::Y00Y00, Semantics::class_);
  double exact = 1 - static_cast<double>(Rational(lb.avoiding, lb.total));
  auto   x     = monte_carlo(6, 400, "exprank", 9);
  CHECK(x.upper >= exact);
}

TEST_CASE("wilson interval") {
  auto [lo, hi] = wilson_interval(50, 100);
  CHECK(lo == doctest::Approx(0.4038).epsilon(1e-3));
  CHECK(hi == doctest::Approx(0.5962).epsilon(1e-3));
  auto [z0, z1] = wilson_interval(0, 10);
  CHECK(z0 == 0);
  CHECK(z1 > 0);
}

TEST_CASE("convergence_fit") {
  auto t = recurrence_table(25);
  auto f = convergence_fit(t, 5, 25);
  CHECK(std::abs(f.slope - f.target) < 0.005);
  CHECK(f.rows == 21);

  auto e  = enumeration_table(12, CensusPattern::Y00Y00, Semantics::class_);
  auto fe = convergence_fit(e, 1, 12);
  CHECK(std::abs(fe.slope - fe.target) < 0.05);

  CensusTable flat;
  for (std::size_t n = 1; n <= 6; ++n)
    flat.rows.push_back({n, 10, 5, 0, Rational(1, 2), 0});
  CHECK_THROWS_AS(convergence_fit(flat), Error);
  CensusTable sure;
  for (std::size_t n = 1; n <= 6; ++n)
    sure.rows.push_back({n, 10, 0, 0, Rational(1), 0});
  CHECK_THROWS_AS(convergence_fit(sure), Error);
  CHECK_THROWS_AS(convergence_fit(t, 5, 8), Error);
}

TEST_CASE("terminal counts: recurrence against enumeration") {
  auto r = recurrence_table(3);
  for (std::size_t n = 1; n <= 2; ++n) {
    auto c = enumerate_counts(n, CensusPattern::Y00Y00, Semantics::class_);
    CHECK(c.avoiding == r.rows[n - 1].avoiding);
    CHECK(c.terminal == r.rows[n - 1].terminal);
  }
  // at n = 3 both values are reported; they need not agree
  auto c3 = enumerate_counts(3, CensusPattern::Y00Y00, Semantics::class_);
  MESSAGE("E''_3: recurrence " << r.rows[2].terminal << ", class enumeration " << c3.terminal
                               << std::string(c3.terminal == r.rows[2].terminal ? "" : "  (differ)"));
  CHECK(c3.terminal > 0);
}
