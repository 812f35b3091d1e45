#include <sstream>

#include "doctest.h"
#include "rank74/census.hpp"
#include "rank74/certificates.hpp"
#include "rank74/cobordism.hpp"

using namespace rank74;

TEST_CASE("exp rank: pattern route implies graph route up to length 7") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t        graph_only = 0, pattern_only = 0, both = 0;
    std::ostringstream list;
    for (auto const& c : canonical_words(n)) {
      auto w = c.representative();
      auto r = exp_rank_certificate(w);
      if (r.witness)
        CHECK(verify_exp_rank(*r.witness, r_graph(rotations(w)[r.witness->rotation])));
      if (r.pattern_route && !r.graph_route) {
        ++pattern_only;
        list << ' ' << c.str() << "(pattern only)";
      }
      if (r.graph_route && !r.pattern_route) {
        ++graph_only;
        if (graph_only <= 8)
          list << ' ' << c.str();
      }
      both += r.graph_route && r.pattern_route;
    }
    MESSAGE("n=" << n << ": both " << both << ", graph only " << graph_only
                 << ", pattern only " << pattern_only << ";" << list.str()
                 << std::string(graph_only > 8 ? " ..." : ""));
    CHECK(pattern_only == 0);
  }
}

TEST_CASE("Wilson intervals cover the exact probability") {
  // exprank-pattern-a has an exact value from the enumeration
  std::size_t covered = 0, total = 0;
  std::ostringstream misses;
  for (std::size_t n = 2; n <= 10; ++n) {
    auto   c     = enumerate_counts(n, CensusPattern::Y00Y00, Semantics::class_);
    double exact = 1 - static_cast<double>(Rational(c.avoiding, c.total));
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      auto e = monte_carlo(n, 1000, "exprank-pattern-a", seed * 7919 + n);
      ++total;
      if (e.lower <= exact && exact <= e.upper)
        ++covered;
      else
        misses << " (n=" << n << ", seed " << seed << ")";
    }
  }
  double rate = double(covered) / double(total);
  MESSAGE("coverage " << covered << "/" << total << " = " << rate << "; misses:" << misses.str());
  CHECK(rate >= 0.95);
}
