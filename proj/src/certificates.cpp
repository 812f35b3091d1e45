#include "rank74/certificates.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rank74/cobordism.hpp"
#include "rank74/complex.hpp"
#include "rank74/error.hpp"

namespace rank74 {

  // ---------------------------------------------------------------- patterns

  nlohmann::json PatternMatch::to_json() const {
    return {{"pattern", std::string(1, pattern)},
            {"position", position},
            {"rotation", rotation}};
  }

  std::vector<PatternMatch> forbidden_pattern_scan(Word const& w, bool cyclic) {
    if (w.empty())
      throw Error("empty word");
    auto        c = canonicalize(w);
    std::size_t n = c.size();
    // bit[k]: interface in front of letter k; bit[0] only exists cyclically
    std::vector<bool> bit(n);
    for (std::size_t k = 1; k < n; ++k)
      bit[k] = c.chain[k];
    bit[0] = c.chain[0] != c.chain[n];
    auto letter = [&](std::size_t k) { return c.letters[k % n]; };
    auto inner  = [&](std::size_t k) { return bool(bit[k % n]); };

    struct Pattern {
      char                     id;
      std::vector<Letter>      letters;
      std::vector<std::size_t> ones;  // offsets of interfaces that must be 1
    };
    using L = Letter;
    static std::vector<Pattern> const patterns{
        {'a', {L::Y, L::Y}, {}},
        {'b', {L::X, L::X, L::X}, {1, 2}},
        {'c', {L::X, L::Y, L::X, L::Y, L::X}, {}},
        {'d', {L::X, L::Y, L::X, L::X, L::Y, L::X}, {3}},
    };
    std::vector<PatternMatch> out;
    for (auto const& pat : patterns) {
      std::size_t m = pat.letters.size();
      if (m > n)
        continue;
      std::size_t last = cyclic ? n : n - m + 1;
      for (std::size_t k = 0; k < last; ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i)
          ok = letter(k + i) == pat.letters[i];
        for (auto o : pat.ones)
          ok = ok && inner(k + o);
        if (ok)
          out.push_back({pat.id, k, k + m > n ? k : 0});
      }
    }
    return out;
  }

  // ---------------------------------------------------------------- flat joints

  namespace {
    // the six corners of a joint close up into one hexagon of the link
    bool hexagon(Presentation const& p, CornerSet const& a, CornerSet const& b) {
      std::array<Corner, 6> cs{a[0], a[1], a[2], b[0], b[1], b[2]};
      std::array<std::pair<std::size_t, std::size_t>, 6> e;
      std::map<std::size_t, std::size_t>                    deg;
      for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < i; ++j)
          if (cs[i] == cs[j])
            return false;
        e[i] = corner_ends(p, cs[i]);
        ++deg[e[i].first];
        ++deg[e[i].second];
      }
      if (deg.size() != 6)
        return false;
      for (auto [_, d] : deg)
        if (d != 2)
          return false;
      // connected: walk the cycle from edge 0
      std::vector<bool> used(6);
      std::size_t       at = e[0].second, count = 1;
      used[0]              = true;
      while (at != e[0].first) {
        bool moved = false;
        for (std::size_t i = 0; i < 6 && !moved; ++i) {
          if (used[i])
            continue;
          if (e[i].first == at || e[i].second == at) {
            used[i] = true;
            at      = e[i].first == at ? e[i].second : e[i].first;
            moved   = true;
            ++count;
          }
        }
        if (!moved)
          return false;
      }
      return count == 6;
    }

    struct Node {
      std::size_t  strip, reading;
      StripReading r;
    };

    struct Arc {
      std::size_t to, shift;
    };
  }  // namespace

  std::optional<std::vector<PlacedStrip>>
  flat_torus_search(Presentation const& p, std::size_t L, std::size_t budget, bool* complete) {
    auto sl = strips(p, L, budget);
    if (complete)
      *complete = sl.complete;
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < sl.strips.size(); ++i) {
      if (sl.strips[i].degenerate())
        continue;
      for (std::size_t r = 0; r < 4; ++r)
        nodes.push_back({i, r, reading(p, sl.strips[i], r)});
    }
    // bottoms by cyclic class
    auto cyc = [](std::vector<Side> const& w) {
      std::vector<Side> best = w;
      for (std::size_t r = 1; r < w.size(); ++r) {
        std::vector<Side> c(w.begin() + r, w.end());
        c.insert(c.end(), w.begin(), w.begin() + r);
        best = std::min(best, c);
      }
      return best;
    };
    std::map<std::vector<Side>, std::vector<std::size_t>> by_bottom;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      by_bottom[cyc(nodes[i].r.bottom)].push_back(i);

    std::vector<std::vector<Arc>> adj(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      auto const& a  = nodes[i].r;
      auto        it = by_bottom.find(cyc(a.top));
      if (it == by_bottom.end())
        continue;
      std::size_t n = a.top.size();
      for (auto j : it->second) {
        auto const& b = nodes[j].r;
        for (std::size_t s = 0; s < n; ++s) {
          bool ok = true;
          for (std::size_t k = 0; k < n && ok; ++k)
            ok = a.top[k] == b.bottom[(k + s) % n];
          for (std::size_t k = 0; k < n && ok; ++k)
            ok = hexagon(p, a.top_joints[k], b.bottom_joints[(k + s) % n]);
          if (ok) {
            adj[i].push_back({j, s});
            break;
          }
        }
      }
    }
    // any directed cycle
    std::vector<int>         colour(nodes.size(), 0);
    std::vector<std::size_t> parent(nodes.size()), pshift(nodes.size());
    for (std::size_t root = 0; root < nodes.size(); ++root) {
      if (colour[root])
        continue;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
      colour[root] = 1;
      while (!stack.empty()) {
        auto& [u, next] = stack.back();
        if (next == adj[u].size()) {
          colour[u] = 2;
          stack.pop_back();
          continue;
        }
        auto arc = adj[u][next++];
        if (colour[arc.to] == 1) {
          // back arc closes u -> arc.to; unwind the tree path
          std::vector<std::size_t> cyc_nodes{u};
          std::vector<std::size_t> shifts{arc.shift};
          std::size_t              x = u;
          while (x != arc.to) {
            shifts.push_back(pshift[x]);
            x = parent[x];
            cyc_nodes.push_back(x);
          }
          std::reverse(cyc_nodes.begin(), cyc_nodes.end());
          std::reverse(shifts.begin(), shifts.end());
          // shifts[k] glues cyc_nodes[k] onto cyc_nodes[k+1] (cyclically);
          // PlacedStrip keeps the shift on the upper strip
          std::vector<PlacedStrip> out;
          std::size_t              m = cyc_nodes.size();
          for (std::size_t k = 0; k < m; ++k) {
            auto const& nd = nodes[cyc_nodes[k]];
            out.push_back({sl.strips[nd.strip], nd.reading, shifts[(k + m - 1) % m]});
          }
          return out;
        }
        if (colour[arc.to] == 0) {
          colour[arc.to] = 1;
          parent[arc.to] = u;
          pshift[arc.to] = arc.shift;
          stack.push_back({arc.to, 0});
        }
      }
    }
    return std::nullopt;
  }

  // ---------------------------------------------------------------- R-graph route

  namespace {
    std::optional<std::vector<PlacedStrip>>
    torus_along_cycle(Presentation const&                         closed,
                      std::vector<Strip> const&                   cyl_strips,
                      std::vector<std::size_t> const&             edge_strip) {
      std::size_t m = edge_strip.size();
      std::vector<std::array<StripReading, 4>> rd(m);
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t r = 0; r < 4; ++r)
          rd[k][r] = reading(closed, cyl_strips[edge_strip[k]], r);
      std::vector<std::size_t> choice(m);
      auto fits = [&](std::size_t k, std::size_t rk, std::size_t k1, std::size_t rk1) {
        auto const& a = rd[k][rk];
        auto const& b = rd[k1][rk1];
        return a.top[0] == b.bottom[0] && hexagon(closed, a.top_joints[0], b.bottom_joints[0]);
      };
      auto rec = [&](auto& self, std::size_t k) -> bool {
        if (k == m)
          return fits(m - 1, choice[m - 1], 0, choice[0]);
        for (std::size_t r = 0; r < 4; ++r) {
          if (k > 0 && !fits(k - 1, choice[k - 1], k, r))
            continue;
          choice[k] = r;
          if (self(self, k + 1))
            return true;
        }
        return false;
      };
      if (!rec(rec, 0))
        return std::nullopt;
      std::vector<PlacedStrip> out;
      for (std::size_t k = 0; k < m; ++k)
        out.push_back({cyl_strips[edge_strip[k]], choice[k], 0});
      return out;
    }

    std::optional<TorusWitness> rgraph_route(Word const& w, Z2Bounds const& b) {
      auto rots = rotations(w);
      for (std::size_t rot = 0; rot < rots.size(); ++rot) {
        auto body = word_cobordism(rots[rot]);
        auto g    = r_graph(body.body);
        CycleSearch cs;
        cs.max_len            = b.max_cycle;
        cs.max_count          = b.max_cycles;
        cs.include_degenerate = false;
        auto cycles = nonloop_cycles(g, cs);
        if (cycles.empty())
          continue;
        auto cl   = close_up_traced(body);
        auto one  = strips(cl.complex, 1).strips;
        std::map<std::pair<Occurrence, Occurrence>, std::size_t> by_occ;
        for (std::size_t i = 0; i < one.size(); ++i) {
          if (one[i].degenerate())
            continue;
          auto const& u = one[i].path[0];
          auto const& d = one[i].path[1];
          Occurrence  bo{u.triangle, std::size_t(u.inverted ? 2 - (u.entry + 1) % 3 : (u.entry + 1) % 3)};
          Occurrence  to{d.triangle, std::size_t(d.inverted ? 2 - (d.entry + 2) % 3 : (d.entry + 2) % 3)};
          by_occ.emplace(std::minmax(bo, to), i);
        }
        for (auto const& c : cycles) {
          std::vector<std::size_t> es;
          for (auto e : c.edges) {
            auto const& cyl = g.edges[e];
            auto        o0  = image_occurrence(cl.triangles[cyl.boundary[0].triangle],
                                               cyl.boundary[0].position);
            auto        o1  = image_occurrence(cl.triangles[cyl.boundary[1].triangle],
                                               cyl.boundary[1].position);
            auto it = by_occ.find(std::minmax(o0, o1));
            if (it == by_occ.end())
              break;
            es.push_back(it->second);
          }
          if (es.size() != c.edges.size())
            continue;
          if (auto placed = torus_along_cycle(cl.complex, one, es)) {
            TorusWitness t;
            t.route    = "rgraph";
            t.word     = w;
            t.rotation = rot;
            t.cycle    = c;
            t.strips   = std::move(*placed);
            return t;
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  Z2Result z2_certificate(Word const& w, Z2Bounds const& bounds) {
    if (w.empty())
      throw Error("empty word");
    Z2Result res;
    res.bounds = bounds;
    if (auto t = rgraph_route(w, bounds)) {
      res.witness = std::move(t);
      return res;
    }
    auto closed = close_up(w);
    for (std::size_t L = 1; L <= bounds.annulus_L; ++L) {
      res.annulus_L_used = L;
      if (auto placed = flat_torus_search(closed, L, bounds.budget)) {
        TorusWitness t;
        t.route  = "annulus";
        t.word   = w;
        t.strips = std::move(*placed);
        res.witness = std::move(t);
        return res;
      }
    }
    return res;
  }

  // ---------------------------------------------------------------- verification

  bool verify_torus(TorusWitness const& t, Presentation const& p) {
    std::size_t m = t.strips.size();
    if (m == 0)
      return false;
    std::vector<StripReading> rd;
    for (auto const& ps : t.strips) {
      if (!valid_strip(p, ps.strip) || ps.strip.degenerate() || ps.reading > 3)
        return false;
      rd.push_back(reading(p, ps.strip, ps.reading));
    }
    // every joint path of three corners runs through the link between the
    // two boundary edges it separates
    auto link_path = [&](CornerSet const& cs, std::size_t from, std::size_t to) {
      std::multiset<std::size_t> ends;
      for (auto const& c : cs) {
        auto [u, v] = corner_ends(p, c);
        ends.insert(u);
        ends.insert(v);
      }
      if (ends.count(from) != 1 || ends.count(to) != 1 || from == to)
        return false;
      std::set<std::size_t> distinct(ends.begin(), ends.end());
      if (distinct.size() != 4)
        return false;
      std::set<std::size_t> reached{from};
      for (int round = 0; round < 3; ++round)
        for (auto const& c : cs) {
          auto [u, v] = corner_ends(p, c);
          if (reached.count(u) || reached.count(v)) {
            reached.insert(u);
            reached.insert(v);
          }
        }
      return reached.count(to) > 0;
    };
    std::size_t V = 0, E = 0, F = 0;
    for (std::size_t k = 0; k < m; ++k) {
      auto const& r = rd[k];
      std::size_t n = r.bottom.size();
      if (r.top.size() != n || r.bottom_joints.size() != n || r.top_joints.size() != n)
        return false;
      for (std::size_t i = 0; i < n; ++i) {
        if (!link_path(r.bottom_joints[i], finish_end(r.bottom[i]), start_end(r.bottom[(i + 1) % n])))
          return false;
        if (!link_path(r.top_joints[i], finish_end(r.top[i]), start_end(r.top[(i + 1) % n])))
          return false;
      }
      V += n;
      E += 3 * n;
      F += 2 * n;
    }
    for (std::size_t k = 0; k < m; ++k) {
      auto const& a = rd[k];
      auto const& b = rd[(k + 1) % m];
      std::size_t s = t.strips[(k + 1) % m].shift;
      std::size_t n = a.top.size();
      if (b.bottom.size() != n || s >= n)
        return false;
      for (std::size_t i = 0; i < n; ++i) {
        if (a.top[i] != b.bottom[(i + s) % n])
          return false;
        // the six corners at the glued vertex: distinct, a single 6-cycle
        std::vector<Corner> six(a.top_joints[i].begin(), a.top_joints[i].end());
        auto const&         lo = b.bottom_joints[(i + s) % n];
        six.insert(six.end(), lo.begin(), lo.end());
        if (std::set<Corner>(six.begin(), six.end()).size() != 6)
          return false;
        std::map<std::size_t, std::vector<std::size_t>> inc;
        for (std::size_t c = 0; c < 6; ++c) {
          auto [u, v] = corner_ends(p, six[c]);
          inc[u].push_back(c);
          inc[v].push_back(c);
        }
        if (inc.size() != 6)
          return false;
        for (auto const& [_, cs] : inc)
          if (cs.size() != 2)
            return false;
        std::set<std::size_t> seen{0};
        std::vector<std::size_t> todo{0};
        while (!todo.empty()) {
          auto c = todo.back();
          todo.pop_back();
          auto [u, v] = corner_ends(p, six[c]);
          for (auto x : {u, v})
            for (auto d : inc[x])
              if (seen.insert(d).second)
                todo.push_back(d);
        }
        if (seen.size() != 6)
          return false;
      }
    }
    return long(V) - long(E) + long(F) == 0;
  }

  TorusWitness transport(TorusWitness const& t,
                         Presentation const& p1,
                         Presentation const& p2,
                         LabelMap const&     phi) {
    TorusWitness out = t;
    out.rotation     = 0;
    out.cycle.reset();
    for (auto& ps : out.strips) {
      for (auto& st : ps.strip.path) {
        std::array<Side, 3> img;
        for (std::size_t d = 0; d < 3; ++d)
          img[d] = p2.to_side(relabel(phi, p1.to_label(oriented_side(p1, st.triangle, st.inverted, st.entry + d))));
        bool done = false;
        for (auto const& o : p2.occurrences(img[0].label)) {
          for (bool inv : {false, true}) {
            for (std::uint8_t e = 0; e < 3 && !done; ++e) {
              bool ok = true;
              for (std::size_t d = 0; d < 3 && ok; ++d)
                ok = oriented_side(p2, o.triangle, inv, e + d) == img[d];
              if (ok) {
                st   = {o.triangle, inv, e, st.off};
                done = true;
              }
            }
            if (done)
              break;
          }
          if (done)
            break;
        }
        if (!done)
          throw Error("transport: triangle has no image");
      }
    }
    return out;
  }

  nlohmann::json TorusWitness::to_json(Presentation const& p) const {
    auto word_str = [&](std::vector<Side> const& w) {
      std::string s;
      for (auto const& l : to_labels(p, w))
        s += (s.empty() ? "" : ".") + l.str();
      return s;
    };
    auto ss = nlohmann::json::array();
    for (auto const& ps : strips) {
      auto gallery = nlohmann::json::array();
      for (auto const& st : ps.strip.path)
        gallery.push_back({st.triangle, st.inverted, st.entry, st.off});
      auto r = reading(p, ps.strip, ps.reading);
      ss.push_back({{"gallery", gallery},
                    {"reading", ps.reading},
                    {"shift", ps.shift},
                    {"bottom", word_str(r.bottom)},
                    {"top", word_str(r.top)}});
    }
    nlohmann::json j{{"route", route},
                     {"word", to_string(word)},
                     {"rotation", rotation},
                     {"strips", ss},
                     {"complex", rank74::to_json(p)}};
    if (cycle) {
      auto es = nlohmann::json::array();
      for (std::size_t i = 0; i < cycle->edges.size(); ++i)
        es.push_back({{"edge", cycle->edges[i]}, {"from", cycle->vertices[i]}});
      j["cycle"] = es;
    }
    return j;
  }

  TorusWitness torus_from_json(nlohmann::json const& j) {
    TorusWitness t;
    t.route    = j.at("route");
    t.word     = parse_word(j.at("word").get<std::string>());
    t.rotation = j.at("rotation");
    for (auto const& s : j.at("strips")) {
      PlacedStrip ps;
      ps.reading = s.at("reading");
      ps.shift   = s.at("shift");
      for (auto const& g : s.at("gallery"))
        ps.strip.path.push_back({g[0].get<std::size_t>(), g[1].get<bool>(),
                                 g[2].get<std::uint8_t>(), g[3].get<std::uint8_t>()});
      t.strips.push_back(std::move(ps));
    }
    return t;
  }


  // ---------------------------------------------------------------- exponential rank

  namespace {
    // walk of c read from position i, forwards or backwards
    std::pair<std::vector<std::size_t>, std::vector<std::string>>
    walk_from(CycleWitness const& c, std::size_t i, bool backwards) {
      std::size_t              n = c.size();
      std::vector<std::size_t> es;
      std::vector<std::string> vs;
      for (std::size_t k = 0; k < n; ++k) {
        if (!backwards) {
          es.push_back(c.edges[(i + k) % n]);
          vs.push_back(c.vertices[(i + k) % n]);
        } else {
          // vertex i, then back along edge i-1
          vs.push_back(c.vertices[(i + n - k) % n]);
          es.push_back(c.edges[(i + n - k - 1) % n]);
        }
      }
      return {es, vs};
    }

    ExpRankWitness split(CycleWitness const& c1, CycleWitness const& c2) {
      ExpRankWitness best;
      std::size_t    best_len = 0;
      bool           have     = false;
      for (std::size_t i = 0; i < c1.size(); ++i) {
        for (std::size_t j = 0; j < c2.size(); ++j) {
          if (c1.vertices[i] != c2.vertices[j])
            continue;
          for (bool back : {false, true}) {
            auto [e1, v1] = walk_from(c1, i, false);
            auto [e2, v2] = walk_from(c2, j, back);
            std::size_t len = 0;
            while (len + 1 < std::min(e1.size(), e2.size()) && e1[len] == e2[len])
              ++len;
            if (have && len <= best_len)
              continue;
            have     = true;
            best_len = len;
            best.join = c1.vertices[i];
            best.shared.assign(e1.begin(), e1.begin() + len);
            auto halves = [&](std::vector<std::size_t> const& e,
                              std::vector<std::size_t>&       gy,
                              std::vector<std::size_t>&       gx) {
              std::vector<std::size_t> rest(e.begin() + len, e.end());
              std::size_t              h = (rest.size() + 1) / 2;
              gy.assign(rest.begin(), rest.begin() + h);
              gx.assign(rest.begin() + h, rest.end());
            };
            halves(e1, best.gamma_y, best.gamma_x);
            halves(e2, best.gamma2_y, best.gamma2_x);
          }
        }
      }
      best.first  = c1;
      best.second = c2;
      return best;
    }

    bool same_cycle(RGraph const& g, CycleWitness const& c, std::vector<std::size_t> const& es,
                    std::string const& start) {
      CycleWitness d;
      try {
        d = make_cycle(g, es, start);
      } catch (Error const&) {
        return false;
      }
      if (d.size() != c.size())
        return false;
      for (std::size_t i = 0; i < c.size(); ++i)
        for (bool back : {false, true}) {
          auto [e, v] = walk_from(c, i, back);
          if (e == d.edges && v == d.vertices)
            return true;
        }
      return false;
    }
  }  // namespace

  nlohmann::json ExpRankWitness::to_json(RGraph const& g) const {
    return {{"rotation", rotation},
            {"first", first.to_json(g)},
            {"second", second.to_json(g)},
            {"join", join},
            {"shared", shared},
            {"gamma_x", gamma_x},
            {"gamma_y", gamma_y},
            {"gamma2_x", gamma2_x},
            {"gamma2_y", gamma2_y}};
  }

  bool verify_exp_rank(ExpRankWitness const& x, RGraph const& g) {
    CycleWitness a, b;
    try {
      a = make_cycle(g, x.first.edges, x.first.vertices.at(0));
      b = make_cycle(g, x.second.edges, x.second.vertices.at(0));
    } catch (std::exception const&) {
      return false;
    }
    if (a.loop_supported || b.loop_supported || !a.consecutive_distinct || !b.consecutive_distinct)
      return false;
    if (a.support() == b.support())
      return false;
    std::set<std::string> va(a.vertices.begin(), a.vertices.end());
    if (std::none_of(b.vertices.begin(), b.vertices.end(),
                     [&](std::string const& v) { return va.count(v); }))
      return false;
    auto cat = [&](std::vector<std::size_t> const& y, std::vector<std::size_t> const& z) {
      auto out = x.shared;
      out.insert(out.end(), y.begin(), y.end());
      out.insert(out.end(), z.begin(), z.end());
      return out;
    };
    return same_cycle(g, a, cat(x.gamma_y, x.gamma_x), x.join)
           && same_cycle(g, b, cat(x.gamma2_y, x.gamma2_x), x.join);
  }

  ExpRankResult exp_rank_certificate(Word const& w, CycleSearch const& s) {
    ExpRankResult res;
    res.patterns      = forbidden_pattern_scan(w, true);
    res.pattern_route = w.size() >= 3 && !res.patterns.empty();
    auto rots         = rotations(w);
    for (std::size_t r = 0; r < rots.size(); ++r) {
      auto g = r_graph(rots[r]);
      if (auto pr = intersecting_cycle_pair(g, s)) {
        auto x      = split(pr->first, pr->second);
        x.rotation  = r;
        res.witness = std::move(x);
        break;
      }
    }
    res.graph_route = res.witness.has_value();
    return res;
  }

  // ---------------------------------------------------------------- mesoscopic rank

  std::optional<std::pair<Word, std::size_t>> omega0_representative(Word const& w) {
    if (w.empty())
      throw Error("empty word");
    std::size_t n = w.size();
    for (auto const& rot : rotations(w)) {
      auto        c = canonicalize(rot);
      std::size_t k = SIZE_MAX;
      // a block of three Y that does not start the word, unless it is the word
      for (std::size_t s = (n == 3 ? 0 : 1); s + 3 <= n && k == SIZE_MAX; ++s)
        if (c.letters[s] == Letter::Y && c.letters[s + 1] == Letter::Y
            && c.letters[s + 2] == Letter::Y)
          k = s;
      if (k == SIZE_MAX)
        continue;
      auto t    = c.chain;
      auto flip = [&](std::size_t y) {  // twist move through the Y at y
        t[y]     = !t[y];
        t[y + 1] = !t[y + 1];
      };
      if (k + 3 == n && t[n])
        flip(k + 2);
      if (t[k + 2])
        flip(k + 1);
      if (t[k + 1])
        flip(k);
      if (k == 0 && t[0])
        continue;  // odd parity: no room to push the twist out
      Word rep;
      for (std::size_t m = 0; m < n; ++m) {
        Generator g{c.letters[m], m == 0 ? bool(t[0]) : false, bool(t[m + 1])};
        rep.push_back(g);
      }
      if (k + 3 < n) {
        rep[k + 2].right = false;
        rep[k + 3].left  = t[k + 3];
      }
      if (canonicalize(rep) != c)
        throw Error("omega0_representative: rewriting left the class");
      return std::make_pair(rep, k);
    }
    return std::nullopt;
  }

  nlohmann::json MesoWitness::to_json() const {
    auto as = nlohmann::json::array();
    for (auto const& l : a)
      as.push_back(l.str());
    return {{"canonical", canonical.str()},
            {"rotation", rotation},
            {"representative", to_string(representative)},
            {"position", position},
            {"outer", outer},
            {"A", as},
            {"B", b},
            {"checks",
             {{"outer_cycle", outer_cycle},
              {"geodesic_A", geodesic_a},
              {"loop_B", loop_b},
              {"strip_A1", strip_a1}}}};
  }

  std::optional<MesoWitness> mesoscopic_certificate(Word const& w) {
    auto found = omega0_representative(w);
    if (!found)
      return std::nullopt;
    MesoWitness m;
    m.canonical      = canonicalize(w);
    m.representative = found->first;
    m.position       = found->second;
    auto rots        = rotations(w);
    for (std::size_t r = 0; r < rots.size(); ++r)
      if (equivalent_words(rots[r], m.representative)) {
        m.rotation = r;
        break;
      }
    auto const& rep  = m.representative;

    auto emb  = subword_embedding(rep, m.position + 1, m.position + 3);
    auto body = word_cobordism(rep);
    auto cl   = close_up_traced(body);
    auto img  = [&](std::string const& l) {
      // omega0 body -> representative body -> closed complex
      return relabel(cl.labels, emb.labels.at(l));
    };

    // outer cycle of R(omega0), carried over edge by edge
    auto                     o  = r_graph(Word(rep.begin() + m.position, rep.begin() + m.position + 3));
    auto                     g  = r_graph(rep);
    std::vector<std::string> ring{"1", "14", "21", "24", "11", "4"};
    std::vector<std::size_t> sub_edges;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      auto u = ring[i], v = ring[(i + 1) % ring.size()];
      for (std::size_t e = 0; e < o.edges.size(); ++e) {
        auto [p, q] = o.endpoints(e);
        if ((p == u && q == v) || (p == v && q == u)) {
          sub_edges.push_back(e);
          break;
        }
      }
    }
    if (sub_edges.size() == ring.size()) {
      std::vector<std::size_t> es;
      for (auto e : sub_edges)
        es.push_back(emb.edges.at(e));
      try {
        auto c        = make_cycle(g, es, emb.vertices.at(ring[0]));
        m.outer_cycle = !c.loop_supported && c.consecutive_distinct;
        for (auto const& v : ring)
          m.outer.push_back(emb.vertices.at(v));
      } catch (Error const&) {
        m.outer_cycle = false;
      }
    }

    auto const& X = cl.complex;
    LinkOracle  oracle(X);
    for (auto const* l : {"18", "26", "23", "27", "15", "2"})
      m.a.push_back(-img(l));
    try {
      m.geodesic_a = local_geodesic_check(oracle, X, m.a);
    } catch (Error const&) {
      m.geodesic_a = false;
    }
    auto b = img("14");
    m.b    = b.name;
    {
      Side s   = X.to_side(b);
      m.loop_b = oracle.partition().class_of(tail_end(s.label))
                 == oracle.partition().class_of(head_end(s.label));
    }
    auto ann = annulus_graph(X, 6);
    auto na  = ann.find_node(to_sides(X, m.a));
    auto n1  = ann.find_node(to_sides(X, {img("14"), img("11")}));
    if (na != SIZE_MAX && n1 != SIZE_MAX)
      for (auto const& arc : ann.arcs)
        if ((arc.bottom == na && arc.top == n1) || (arc.bottom == n1 && arc.top == na))
          m.strip_a1 = true;
    return m;
  }

}  // namespace rank74
