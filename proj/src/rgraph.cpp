#include "rank74/rgraph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <regex>

#include "rank74/cobordism.hpp"
#include "rank74/error.hpp"

namespace rank74 {

  std::vector<Cylinder> cylinders(Presentation const& p) {
    std::vector<Cylinder>                               out;
    std::set<std::pair<Occurrence, Occurrence>>         seen;
    for (std::uint32_t l = 0; l < p.num_labels(); ++l) {
      auto const& occ = p.occurrences(l);
      for (auto const& o1 : occ) {
        for (auto const& o2 : occ) {
          if (o1 == o2)
            continue;
          auto const a = o1.triangle, b = o2.triangle;
          auto const i = o1.position, j = o2.position;
          // first triangle read as p q l, glued side last
          Side       sl = p.side(a, i);
          Occurrence pi{a, (i + 1) % 3}, qi{a, (i + 2) % 3};
          Side       sp = p.side(a, i + 1), sq = p.side(a, i + 2);
          // second triangle read so that it starts with -l: (-l) u v
          Occurrence ui, vi;
          Side       su, sv;
          if (p.side(b, j) == -sl) {
            ui = {b, (j + 1) % 3};
            vi = {b, (j + 2) % 3};
            su = p.side(b, j + 1);
            sv = p.side(b, j + 2);
          } else {
            ui = {b, (j + 2) % 3};
            vi = {b, (j + 1) % 3};
            su = -p.side(b, j + 2);
            sv = -p.side(b, j + 1);
          }
          bool deg = a == b;
          auto emit = [&](Side waist, Occurrence w1, Occurrence w2,
                          Occurrence b1, Side s1, Occurrence b2, Side s2) {
            // a triangle folded onto itself only along its repeated label
            if (deg && waist.label != sl.label)
              return;
            auto key = std::minmax(b1, b2);
            if (!seen.insert(key).second)
              return;
            Cylinder c;
            c.diagonal        = {o1, o2};
            c.waist           = {w1, w2};
            c.boundary        = {b1, b2};
            c.boundary_labels = {p.to_label(s1), p.to_label(s2)};
            c.waist_label     = p.to_label(waist);
            c.degenerate      = deg;
            out.push_back(c);
          };
          if (su == -sp)
            emit(sp, pi, ui, qi, sq, vi, sv);
          if (sv == -sq)
            emit(sq, qi, vi, pi, sp, ui, su);
        }
      }
    }
    return out;
  }

  std::pair<std::string, std::string> RGraph::endpoints(std::size_t e) const {
    auto const& c = edges.at(e);
    return {c.boundary_labels[0].name, c.boundary_labels[1].name};
  }

  bool RGraph::is_loop(std::size_t e) const {
    auto [u, v] = endpoints(e);
    return u == v;
  }

  std::size_t RGraph::vertex_index(std::string const& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v, NaturalLess());
    if (it == vertices.end() || *it != v)
      throw Error("vertex " + v + " not in R-graph");
    return it - vertices.begin();
  }

  std::multiset<std::pair<std::string, std::string>>
  RGraph::edge_multiset() const {
    std::multiset<std::pair<std::string, std::string>> out;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = endpoints(e);
      if (natural_less(v, u))
        std::swap(u, v);
      out.emplace(u, v);
    }
    return out;
  }

  nlohmann::json RGraph::to_json() const {
    auto es = nlohmann::json::array();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto const& c = edges[e];
      es.push_back({{"u", c.boundary_labels[0].name},
                    {"v", c.boundary_labels[1].name},
                    {"waist", c.waist_label.str()},
                    {"triangles", {c.diagonal[0].triangle, c.diagonal[1].triangle}},
                    {"sides",
                     {{c.diagonal[0].triangle, c.diagonal[0].position},
                      {c.diagonal[1].triangle, c.diagonal[1].position}}},
                    {"degenerate", c.degenerate}});
    }
    return {{"vertices", vertices}, {"edges", es}};
  }

  std::string RGraph::to_dot(std::string const& name) const {
    std::string out = "graph \"" + name + "\" {\n";
    for (auto const& v : vertices)
      out += "  \"" + v + "\";\n";
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v]   = endpoints(e);
      auto const& c = edges[e];
      out += "  \"" + u + "\" -- \"" + v + "\" [label=\"" + c.waist_label.str()
             + "\", tooltip=\"triangles " + std::to_string(c.diagonal[0].triangle)
             + "," + std::to_string(c.diagonal[1].triangle) + "\""
             + (c.degenerate ? ", style=dashed" : "") + "];\n";
    }
    return out + "}\n";
  }

  RGraph r_graph(Presentation const& p) {
    RGraph                             g;
    std::set<std::string, NaturalLess> vs;
    g.edges = cylinders(p);
    for (auto const& c : g.edges) {
      vs.insert(c.boundary_labels[0].name);
      vs.insert(c.boundary_labels[1].name);
    }
    g.vertices.assign(vs.begin(), vs.end());
    return g;
  }

  RGraph r_graph(Word const& w) {
    return r_graph(word_cobordism(w).body);
  }

  EdgeMultiset parse_rgraph_dot(std::string const& dot) {
    EdgeMultiset out;
    std::regex   edge("\"([^\"]*)\"\\s*--\\s*\"([^\"]*)\"");
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge);
         it != std::sregex_iterator();
         ++it) {
      std::string u = (*it)[1], v = (*it)[2];
      if (natural_less(v, u))
        std::swap(u, v);
      out.emplace(u, v);
    }
    return out;
  }

  EdgeMultiset edge_multiset(nlohmann::json const& edges) {
    EdgeMultiset out;
    for (auto const& e : edges) {
      // fixture pairs or RGraph::to_json edge objects
      std::string u = e.is_array() ? e[0] : e["u"], v = e.is_array() ? e[1] : e["v"];
      if (natural_less(v, u))
        std::swap(u, v);
      out.emplace(u, v);
    }
    return out;
  }

  Embedding subword_embedding(Word const& w, std::size_t first, std::size_t last) {
    if (first < 1 || first > last || last > w.size())
      throw Error("subword range out of bounds");
    Word sub(w.begin() + (first - 1), w.begin() + last);
    auto wb = word_body(w);
    auto sb = word_body(sub);

    std::map<std::string, SignedLabel, NaturalLess> phi;
    std::map<std::size_t, std::size_t>              tri;
    for (std::size_t m = 0; m < sub.size(); ++m) {
      auto const& sl = sb.letter_labels[m];
      auto const& wl = wb.letter_labels[first - 1 + m];
      for (auto const& [raw, s] : sl) {
        auto t   = wl.at(raw).times(s.negative);
        auto [it, fresh] = phi.emplace(s.name, t);
        if (!fresh && !(it->second == t))
          throw Error("subword_embedding: inconsistent label image for " + s.name);
      }
      auto const& st = sb.letter_triangles[m];
      auto const& wt = wb.letter_triangles[first - 1 + m];
      for (std::size_t t = 0; t < st.size(); ++t) {
        auto [it, fresh] = tri.emplace(st[t].index, wt[t].index);
        if (!fresh && it->second != wt[t].index)
          throw Error("subword_embedding: inconsistent triangle image");
      }
    }
    auto    rs = r_graph(sb.cob.body);
    auto    rw = r_graph(wb.cob.body);
    Embedding out;
    out.labels = phi;
    for (auto const& v : rs.vertices) {
      auto img = phi.at(v).name;
      rw.vertex_index(img);  // throws if missing
      out.vertices.emplace(v, img);
    }
    std::set<std::size_t> used;
    for (std::size_t e = 0; e < rs.edges.size(); ++e) {
      auto const& c  = rs.edges[e];
      std::set<std::size_t> ts{tri.at(c.diagonal[0].triangle),
                               tri.at(c.diagonal[1].triangle)};
      std::set<std::string> names{phi.at(c.boundary_labels[0].name).name,
                                  phi.at(c.boundary_labels[1].name).name};
      std::size_t found = SIZE_MAX;
      for (std::size_t f = 0; f < rw.edges.size() && found == SIZE_MAX; ++f) {
        auto const& d = rw.edges[f];
        if (used.count(f))
          continue;
        std::set<std::size_t> dts{d.diagonal[0].triangle, d.diagonal[1].triangle};
        std::set<std::string> dn{d.boundary_labels[0].name,
                                 d.boundary_labels[1].name};
        if (dts == ts && dn == names && d.degenerate == c.degenerate)
          found = f;
      }
      if (found == SIZE_MAX)
        throw Error("subword_embedding: edge " + c.boundary_labels[0].name + "-"
                    + c.boundary_labels[1].name + " has no image");
      used.insert(found);
      out.edges.push_back(found);
    }
    return out;
  }

  nlohmann::json CycleWitness::to_json(RGraph const& g) const {
    auto es = nlohmann::json::array();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = g.endpoints(edges[i]);
      std::string to = vertices[i] == u ? v : u;
      es.push_back({{"edge", edges[i]}, {"from", vertices[i]}, {"to", to}});
    }
    return {{"steps", es},
            {"loop_supported", loop_supported},
            {"consecutive_distinct", consecutive_distinct}};
  }

  CycleWitness make_cycle(RGraph const&                   g,
                          std::vector<std::size_t> const& edges,
                          std::string const&              start) {
    if (edges.empty())
      throw Error("empty cycle");
    CycleWitness c;
    c.edges       = edges;
    std::string at = start;
    for (auto e : edges) {
      auto [u, v] = g.endpoints(e);
      if (at != u && at != v)
        throw Error("edge sequence is not a walk");
      c.vertices.push_back(at);
      at = at == u ? v : u;
    }
    if (at != start)
      throw Error("walk is not closed");
    auto sup           = c.support();
    c.loop_supported   = sup.size() == 1 && g.is_loop(*sup.begin());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] == edges[(i + 1) % edges.size()] && edges.size() > 1)
        c.consecutive_distinct = false;
    }
    if (edges.size() == 1 && !g.is_loop(edges[0]))
      c.consecutive_distinct = false;
    return c;
  }

  namespace {
    using Step = std::pair<std::size_t, std::size_t>;  // edge, start vertex

    std::vector<Step> canonical(std::vector<Step> const& w,
                                std::vector<std::size_t> const& ends) {
      std::size_t       n = w.size();
      std::vector<Step> best;
      std::vector<Step> rev(n);
      for (std::size_t i = 0; i < n; ++i) {
        // walking edge i backwards starts where it ended
        rev[i] = {w[n - 1 - i].first, ends[n - 1 - i]};
      }
      for (auto const* s : std::array<std::vector<Step> const*, 2>{&w, &rev}) {
        for (std::size_t r = 0; r < n; ++r) {
          std::vector<Step> c(s->begin() + r, s->end());
          c.insert(c.end(), s->begin(), s->begin() + r);
          if (best.empty() || c < best)
            best = std::move(c);
        }
      }
      return best;
    }

    bool primitive(std::vector<Step> const& w) {
      std::size_t n = w.size();
      for (std::size_t d = 1; d < n; ++d) {
        if (n % d)
          continue;
        bool rep = true;
        for (std::size_t i = d; i < n && rep; ++i)
          rep = w[i] == w[i - d];
        if (rep)
          return false;
      }
      return true;
    }
  }  // namespace

  CycleList find_cycles(RGraph const& g, CycleSearch const& s) {
    std::size_t nv = g.vertices.size();
    struct Arc {
      std::size_t edge, to;
    };
    std::vector<std::vector<Arc>> adj(nv);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (!s.include_degenerate && g.edges[e].degenerate)
        continue;
      auto [u, v] = g.endpoints(e);
      auto a = g.vertex_index(u), b = g.vertex_index(v);
      adj[a].push_back({e, b});
      if (a != b)
        adj[b].push_back({e, a});
    }
    CycleList                          out;
    std::set<std::vector<Step>>        seen;
    std::vector<Step>                  walk;
    std::vector<std::size_t>           ends;
    std::size_t                        steps      = 0;
    std::size_t const                  step_limit = 50 * s.max_count + 1000000;

    auto record = [&] {
      std::set<std::size_t> sup;
      for (auto const& st : walk)
        sup.insert(st.first);
      if (sup.size() == 1 && g.is_loop(*sup.begin()))
        return;
      if (!primitive(walk))
        return;
      auto key = canonical(walk, ends);
      if (!seen.insert(key).second)
        return;
      std::vector<std::size_t> es;
      for (auto const& st : key)
        es.push_back(st.first);
      out.cycles.push_back(make_cycle(g, es, g.vertices[key[0].second]));
    };

    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start,
                                                           std::size_t at) {
      if (out.cycles.size() >= s.max_count || ++steps > step_limit) {
        out.complete = false;
        return;
      }
      for (auto const& a : adj[at]) {
        if (!walk.empty() && a.edge == walk.back().first)
          continue;
        if (a.to < start)
          continue;
        walk.push_back({a.edge, at});
        ends.push_back(a.to);
        if (a.to == start && a.edge != walk.front().first)
          record();
        if (walk.size() < s.max_len)
          dfs(start, a.to);
        walk.pop_back();
        ends.pop_back();
        if (!out.complete)
          return;
      }
    };
    for (std::size_t v = 0; v < nv && out.complete; ++v)
      dfs(v, v);
    std::stable_sort(out.cycles.begin(), out.cycles.end(),
                     [](CycleWitness const& a, CycleWitness const& b) {
                       return a.size() < b.size();
                     });
    return out;
  }

  std::vector<CycleWitness> nonloop_cycles(RGraph const& g, CycleSearch const& s) {
    return find_cycles(g, s).cycles;
  }

  std::optional<std::pair<CycleWitness, CycleWitness>>
  intersecting_cycle_pair(RGraph const& g, CycleSearch const& s) {
    auto cs = nonloop_cycles(g, s);
    // shortest combined length first
    std::optional<std::pair<CycleWitness, CycleWitness>> best;
    std::size_t                                          best_len = SIZE_MAX;
    std::size_t const limit = std::min<std::size_t>(cs.size(), 4000);
    for (std::size_t i = 0; i < limit; ++i) {
      if (2 * cs[i].size() >= best_len)
        break;
      std::set<std::string> vi(cs[i].vertices.begin(), cs[i].vertices.end());
      auto                  si = cs[i].support();
      for (std::size_t j = i + 1; j < limit; ++j) {
        if (cs[i].size() + cs[j].size() >= best_len)
          break;
        if (cs[j].support() == si)
          continue;
        bool meet = std::any_of(cs[j].vertices.begin(), cs[j].vertices.end(),
                                [&](std::string const& v) { return vi.count(v); });
        if (meet) {
          best     = std::make_pair(cs[i], cs[j]);
          best_len = cs[i].size() + cs[j].size();
        }
      }
    }
    return best;
  }

}  // namespace rank74
