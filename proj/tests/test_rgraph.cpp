#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "rank74/cobordism.hpp"
#include "rank74/error.hpp"
#include "rank74/rgraph.hpp"
#include "rank74/strips.hpp"

using namespace rank74;

namespace {
  EdgeMultiset golden(std::string const& word) {
    return edge_multiset(json_fixture("rgraph_" + word + ".json")["edges"]);
  }

  std::vector<SignedLabel> path(std::vector<std::string> const& v) {
    std::vector<SignedLabel> out;
    for (auto const& s : v)
      out.push_back(SignedLabel::parse(s));
    return out;
  }

  bool connected(RGraph const& g, std::string const& a, std::string const& b) {
    if (!std::count(g.vertices.begin(), g.vertices.end(), a)
        || !std::count(g.vertices.begin(), g.vertices.end(), b))
      return false;
    std::set<std::string>   seen{a};
    std::vector<std::string> todo{a};
    while (!todo.empty()) {
      auto u = todo.back();
      todo.pop_back();
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [p, q] = g.endpoints(e);
        for (auto [s, t] : {std::pair{p, q}, std::pair{q, p}})
          if (s == u && seen.insert(t).second)
            todo.push_back(t);
      }
    }
    return seen.count(b) > 0;
  }

  bool has_cycle_through(std::vector<CycleWitness> const& cs,
                         std::vector<std::string> const&  vs) {
    for (auto const& c : cs) {
      if (c.vertices.size() != vs.size())
        continue;
      for (std::size_t r = 0; r < vs.size(); ++r) {
        bool fwd = true, bwd = true;
        for (std::size_t i = 0; i < vs.size(); ++i) {
          fwd = fwd && c.vertices[(i + r) % vs.size()] == vs[i];
          bwd = bwd && c.vertices[(r + vs.size() - i) % vs.size()] == vs[i];
        }
        if (fwd || bwd)
          return true;
      }
    }
    return false;
  }

  Word random_word(std::mt19937_64& rng, std::size_t len) {
    auto gens = standard_generators();
    for (auto l : {Letter::Y})
      for (bool i : {false, true})
        for (bool j : {false, true})
          gens.push_back(Generator{l, i, j});
    Word w;
    for (std::size_t k = 0; k < len; ++k)
      w.push_back(gens[rng() % gens.size()]);
    return w;
  }
}  // namespace

TEST_CASE("r_graph reproduces the golden graphs") {
  for (auto const* w : {"X00", "Y00", "X01.X00", "X00.Y00", "Y00.Y00.Y00"}) {
    CAPTURE(w);
    auto g = r_graph(parse_word(w));
    CHECK(g.edge_multiset() == golden(w));
  }
  auto x = r_graph(parse_word("X00"));
  std::vector<std::string> expect{"2", "3", "4", "x", "x'", "z", "z'"};
  CHECK(x.vertices == expect);
}

TEST_CASE("cylinders: one per edge, degenerate ones are loops") {
  for (auto const* w : {"X00", "Y00", "X01.X00", "X00.Y00", "Y00.Y00.Y00"}) {
    auto g = r_graph(parse_word(w));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto const& c = g.edges[e];
      if (c.degenerate)
        CHECK(g.is_loop(e));
      else
        CHECK(c.boundary[0] != c.boundary[1]);
    }
    // no two edges come from the same pair of boundary occurrences
    std::set<std::pair<Occurrence, Occurrence>> seen;
    for (auto const& c : g.edges)
      CHECK(seen.insert(std::minmax(c.boundary[0], c.boundary[1])).second);
  }
  auto x = r_graph(parse_word("X00"));
  std::size_t loops = 0;
  for (std::size_t e = 0; e < x.edges.size(); ++e)
    loops += x.is_loop(e);
  CHECK(loops == 1);
}

TEST_CASE("DOT export round trip") {
  for (auto const* w : {"Y00", "X01.X00", "Y00.Y00.Y00"}) {
    auto g = r_graph(parse_word(w));
    CHECK(parse_rgraph_dot(g.to_dot(w)) == g.edge_multiset());
  }
  auto j = r_graph(parse_word("X00")).to_json();
  CHECK(j["edges"].size() == 5);
  CHECK(j["edges"][0].contains("triangles"));
}

TEST_CASE("flipping a twist flips the block's subgraph") {
  auto gens = standard_generators();
  for (auto const& z : gens) {
    for (auto const& t : gens) {
      // right twist of the first block
      for (int side = 0; side < 2; ++side) {
        Word a{z, t}, b{z, t};
        std::size_t blk = side == 0 ? 0 : 1;
        if (side == 0)
          b[0].right = !b[0].right;
        else
          b[1].left = !b[1].left;
        auto ga = r_graph(a), gb = r_graph(b);
        auto ea = subword_embedding(a, blk + 1, blk + 1);
        auto eb = subword_embedding(b, blk + 1, blk + 1);
        auto rz = r_graph(Word{a[blk]});
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));
        // the block graph moves by the mirror of its strands
        std::string s1 = side == 0 ? "x'" : "x", s2 = side == 0 ? "z'" : "z";
        for (auto const& [v, img] : ea.vertices) {
          std::string mv = v == s1 ? s2 : v == s2 ? s1 : v;
          CHECK(eb.vertices.at(mv) == img);
        }
        // and nothing outside the block changes
        EdgeMultiset ra = ga.edge_multiset(), rb = gb.edge_multiset();
        auto         drop = [](EdgeMultiset& m, RGraph const& g, Embedding const& e) {
          for (auto f : e.edges) {
            auto [u, v] = g.endpoints(f);
            if (natural_less(v, u))
              std::swap(u, v);
            m.erase(m.find({u, v}));
          }
        };
        drop(ra, ga, ea);
        drop(rb, gb, eb);
        CHECK(ra == rb);
        CHECK(ea.edges.size() == rz.edges.size());
      }
    }
  }
}

TEST_CASE("strand disconnection in X*k.Xk*") {
  for (bool i : {false, true})
    for (bool k : {false, true})
      for (bool l : {false, true}) {
        Word w{Generator{Letter::X, i, k}, Generator{Letter::X, k, l}};
        auto g = r_graph(w);
        CAPTURE(to_string(w));
        for (auto const* a : {"x", "z"})
          for (auto const* b : {"x'", "z'"})
            CHECK_FALSE(connected(g, a, b));
      }
}

TEST_CASE("subword_embedding") {
  auto w = parse_word("X01.X00");
  auto e = subword_embedding(w, 2, 2);
  // X00's horizontals reappear with the second letter's labels
  CHECK(e.vertices.at("2") == "12");
  CHECK(e.vertices.at("x'") == "x'");
  CHECK(e.edges.size() == 5);

  auto whole = subword_embedding(w, 1, 2);
  for (auto const& [v, img] : whole.vertices)
    CHECK(v == img);
  auto g = r_graph(w);
  for (std::size_t k = 0; k < whole.edges.size(); ++k)
    CHECK(whole.edges[k] == k);

  auto o  = parse_word("Y00.Y00.Y00");
  auto e2 = subword_embedding(o, 1, 2);
  CHECK(e2.edges.size() == r_graph(parse_word("Y00.Y00")).edges.size());
  CHECK(std::set<std::size_t>(e2.edges.begin(), e2.edges.end()).size()
        == e2.edges.size());

  CHECK_THROWS_AS(subword_embedding(w, 0, 1), Error);
  CHECK_THROWS_AS(subword_embedding(w, 2, 3), Error);
}

TEST_CASE("subword_embedding is total on random words") {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 200; ++trial) {
    auto        w     = random_word(rng, 1 + rng() % 8);
    std::size_t first = 1 + rng() % w.size();
    std::size_t last  = first + rng() % (w.size() - first + 1);
    CAPTURE(to_string(w));
    CAPTURE(first);
    CAPTURE(last);
    Embedding e;
    CHECK_NOTHROW(e = subword_embedding(w, first, last));
    Word sub(w.begin() + (first - 1), w.begin() + last);
    CHECK(e.edges.size() == r_graph(sub).edges.size());
  }
}

TEST_CASE("nonloop_cycles") {
  auto a  = r_graph(parse_word("X01.X00"));
  auto ca = nonloop_cycles(a);
  REQUIRE(!ca.empty());
  for (auto const& c : ca) {
    CHECK_FALSE(c.loop_supported);
    CHECK(c.consecutive_distinct);
  }
  // through z-2, 2-12 and the loop at 12
  bool found = false;
  for (auto const& c : ca) {
    std::set<std::string> vs(c.vertices.begin(), c.vertices.end());
    found = found || vs == std::set<std::string>{"2", "12"};
  }
  CHECK(found);

  CHECK(nonloop_cycles(r_graph(parse_word("X00.Y00"))).empty());
  CHECK(nonloop_cycles(r_graph(parse_word("X00"))).empty());

  auto o = r_graph(parse_word("Y00.Y00.Y00"));
  CHECK(has_cycle_through(nonloop_cycles(o), {"1", "14", "21", "24", "11", "4"}));

  // make_cycle checks the walk
  CHECK_THROWS_AS(make_cycle(a, {0, 1}, "x"), Error);
}

TEST_CASE("intersecting_cycle_pair") {
  auto p = intersecting_cycle_pair(r_graph(parse_word("Y00.Y00.Y00")));
  REQUIRE(p.has_value());
  CHECK(p->first.support() != p->second.support());
  CHECK_FALSE(intersecting_cycle_pair(r_graph(parse_word("X00"))).has_value());
  CHECK_FALSE(intersecting_cycle_pair(r_graph(parse_word("X00.X00"))).has_value());
}

TEST_CASE("strips and the annulus graph of the closed omega0 complex") {
  auto w = close_up(parse_word("Y00.Y00.Y00"));
  CHECK(annulus_graph(w, 0).nodes.empty());

  auto g = annulus_graph(w, 6);
  CHECK(g.complete);
  for (auto const& s : g.strips)
    CHECK(valid_strip(w, s));

  auto A  = to_sides(w, path({"-18", "-26", "-23", "-27", "-15", "-2"}));
  auto a  = g.find_node(A);
  auto a1 = g.find_node(to_sides(w, path({"14", "11"})));
  REQUIRE(a != SIZE_MAX);
  REQUIRE(a1 != SIZE_MAX);
  CHECK(g.nodes[a].geodesic);
  CHECK(g.nodes[a1].geodesic);
  bool arc = false;
  for (auto const& r : g.arcs)
    if ((r.bottom == a && r.top == a1) || (r.bottom == a1 && r.top == a)) {
      arc = true;
      CHECK(g.strips[r.strip].period() == 6);
    }
  CHECK(arc);

  // nothing of period <= 2 touches 14.11
  auto g2 = annulus_graph(w, 2);
  auto b1 = g2.find_node(to_sides(w, path({"14", "11"})));
  if (b1 != SIZE_MAX)
    for (auto const& r : g2.arcs)
      CHECK((r.bottom != b1 && r.top != b1));
}

TEST_CASE("period-1 strips are the cylinders of the closed complex") {
  for (auto const* word : {"X00", "Y00", "X01.X00"}) {
    auto p  = close_up(parse_word(word));
    auto cs = cylinders(p);
    auto sl = strips(p, 1);
    CAPTURE(word);
    std::multiset<std::pair<Side, Side>> from_cyl, from_strip;
    auto key = [](Side a, Side b) {
      a.negative = b.negative = false;
      return a < b ? std::pair{a, b} : std::pair{b, a};
    };
    for (auto const& c : cs)
      from_cyl.insert(key(p.to_side(c.boundary_labels[0]), p.to_side(c.boundary_labels[1])));
    for (auto const& s : sl.strips) {
      auto r = reading(p, s, 0);
      from_strip.insert(key(r.bottom[0], r.top[0]));
    }
    CHECK(from_cyl == from_strip);
  }
}

TEST_CASE("strip readings") {
  auto p = close_up(parse_word("Y00.Y00.Y00"));
  auto s = strips(p, 2).strips;
  REQUIRE(!s.empty());
  for (auto const& st : s) {
    auto r0 = reading(p, st, 0);
    auto r1 = reading(p, st, 1);
    auto r2 = reading(p, st, 2);
    CHECK(r0.bottom.size() == st.period());
    CHECK(r2.bottom == r0.top);
    CHECK(canonical_circle(r1.top) == canonical_circle(r0.bottom));
    for (auto const& j : r0.bottom_joints)
      CHECK(std::is_sorted(j.begin(), j.end()));
  }
}
