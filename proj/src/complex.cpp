#include "rank74/complex.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/pending/disjoint_sets.hpp>

#include "rank74/error.hpp"

namespace rank74 {

  std::string end_name(Presentation const& p, std::size_t end) {
    return p.label_name(end / 2) + (end % 2 ? ".h" : ".t");
  }

  std::pair<std::size_t, std::size_t> corner_ends(Presentation const& p,
                                                  Corner                c) {
    return {finish_end(p.side(c.triangle, c.vertex + 2)),
            start_end(p.side(c.triangle, c.vertex))};
  }

  VertexPartition::VertexPartition(Presentation const& p) {
    std::size_t                            m = 2 * p.num_labels();
    boost::disjoint_sets_with_storage<>    ds(m);
    for (std::size_t e = 0; e < m; ++e)
      ds.make_set(e);
    for (std::size_t t = 0; t < p.size(); ++t) {
      for (std::size_t v = 0; v < 3; ++v) {
        auto [a, b] = corner_ends(p, {t, v});
        ds.union_set(a, b);
      }
    }
    // classes numbered by their smallest end
    std::map<std::size_t, std::size_t> cls;
    _class.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
      auto r  = ds.find_set(e);
      auto it = cls.find(r);
      if (it == cls.end()) {
        it = cls.emplace(r, _members.size()).first;
        _members.emplace_back();
      }
      _class[e] = it->second;
      _members[it->second].push_back(e);
    }
  }

  VertexPartition vertex_partition(Presentation const& p) {
    return VertexPartition(p);
  }

  std::size_t LinkGraph::local(std::size_t end) const {
    auto it = std::lower_bound(ends.begin(), ends.end(), end);
    if (it == ends.end() || *it != end)
      throw Error("edge-end not in this link");
    return it - ends.begin();
  }

  std::string LinkGraph::to_dot(Presentation const& p) const {
    std::string out = "graph link_" + std::to_string(vertex_class) + " {\n";
    for (auto e : ends)
      out += "  \"" + end_name(p, e) + "\";\n";
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
      auto [u, v] = graph.edges[i];
      out += "  \"" + end_name(p, ends[u]) + "\" -- \"" + end_name(p, ends[v])
             + "\" [label=\"" + std::to_string(corners[i].triangle) + ":"
             + std::to_string(corners[i].vertex) + "\"];\n";
    }
    return out + "}\n";
  }

  LinkGraph link_graph(Presentation const&    p,
                       VertexPartition const& vp,
                       std::size_t            vertex_class) {
    if (vertex_class >= vp.size())
      throw Error("unknown vertex class " + std::to_string(vertex_class));
    LinkGraph g;
    g.vertex_class = vertex_class;
    g.ends         = vp.members(vertex_class);
    g.graph        = Graph(g.ends.size());
    for (std::size_t t = 0; t < p.size(); ++t) {
      for (std::size_t v = 0; v < 3; ++v) {
        auto [a, b] = corner_ends(p, {t, v});
        if (vp.class_of(a) != vertex_class)
          continue;
        g.graph.add_edge(g.local(a), g.local(b));
        g.corners.push_back({t, v});
      }
    }
    return g;
  }

  bool is_moebius_kantor(LinkGraph const& g) {
    return is_moebius_kantor(g.graph);
  }

  LinkOracle::LinkOracle(Presentation const& p) : _vp(p) {
    for (std::size_t c = 0; c < _vp.size(); ++c) {
      _links.push_back(link_graph(p, _vp, c));
      auto const&                           g = _links.back().graph;
      std::vector<std::vector<std::size_t>> d;
      for (std::size_t u = 0; u < g.n; ++u)
        d.push_back(g.distances(u));
      _dist.push_back(std::move(d));
    }
  }

  std::size_t LinkOracle::distance(std::size_t a, std::size_t b) const {
    auto c = _vp.class_of(a);
    if (_vp.class_of(b) != c)
      return SIZE_MAX;
    auto const& l = _links[c];
    return _dist[c][l.local(a)][l.local(b)];
  }

  std::vector<std::size_t>
  junction_distances(LinkOracle const&               o,
                     Presentation const&             p,
                     std::vector<SignedLabel> const& path) {
    if (path.empty())
      throw Error("empty path");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < path.size(); ++i) {
      Side a = p.to_side(path[i]);
      Side b = p.to_side(path[(i + 1) % path.size()]);
      // arriving along a means standing at finish(a); the outgoing
      // direction is b, seen in the link as the start end of b
      auto ea = finish_end(a), eb = start_end(b);
      if (o.partition().class_of(ea) != o.partition().class_of(eb))
        throw Error("path not composable at " + path[i].str() + " -> "
                    + path[(i + 1) % path.size()].str());
      out.push_back(o.distance(ea, eb));
    }
    return out;
  }

  bool local_geodesic_check(LinkOracle const&               o,
                            Presentation const&             p,
                            std::vector<SignedLabel> const& path) {
    auto d = junction_distances(o, p, path);
    return std::all_of(
        d.begin(), d.end(), [](std::size_t x) { return x >= 3; });
  }

  bool local_geodesic_check(Presentation const&             p,
                            std::vector<SignedLabel> const& path) {
    return local_geodesic_check(LinkOracle(p), p, path);
  }

  namespace {
    using boost::multiprecision::cpp_int;

    // rank over Q by fraction-free elimination
    std::size_t rational_rank(std::vector<std::vector<cpp_int>> m) {
      std::size_t rank = 0;
      if (m.empty())
        return 0;
      std::size_t cols = m[0].size();
      cpp_int     prev = 1;
      for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0)
          ++piv;
        if (piv == m.size())
          continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
          for (std::size_t k = c + 1; k < cols; ++k) {
            m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
          }
          m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
      }
      return rank;
    }
  }  // namespace

  std::size_t GroupPresentation::abelianization_rank() const {
    std::map<std::string, std::size_t> col;
    for (auto const& g : generators)
      col.emplace(g, col.size());
    std::vector<std::vector<cpp_int>> m;
    for (auto const& r : relators) {
      std::vector<cpp_int> row(generators.size(), 0);
      for (auto const& s : r)
        row[col.at(s.name)] += s.negative ? -1 : 1;
      m.push_back(row);
    }
    return generators.size() - rational_rank(m);
  }

  nlohmann::json GroupPresentation::to_json() const {
    auto rels = nlohmann::json::array();
    for (auto const& r : relators) {
      auto w = nlohmann::json::array();
      for (auto const& s : r)
        w.push_back(s.str());
      rels.push_back(w);
    }
    return {{"generators", generators},
            {"spanning_tree", tree},
            {"relators", rels},
            {"abelianization_rank", abelianization_rank()}};
  }

  GroupPresentation group_presentation(Presentation const& p) {
    VertexPartition vp(p);
    std::size_t     nv = vp.size();
    // 1-skeleton: label l runs from class(tail) to class(head)
    std::vector<std::vector<std::uint32_t>> inc(nv);
    for (std::uint32_t l = 0; l < p.num_labels(); ++l) {
      inc[vp.class_of(tail_end(l))].push_back(l);
      if (vp.class_of(head_end(l)) != vp.class_of(tail_end(l)))
        inc[vp.class_of(head_end(l))].push_back(l);
    }
    std::vector<char> seen(nv, 0), in_tree(p.num_labels(), 0);
    std::deque<std::size_t> q;
    if (nv > 0) {
      seen[0] = 1;
      q.push_back(0);
    }
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (auto l : inc[u]) {  // labels are in natural order
        auto a = vp.class_of(tail_end(l)), b = vp.class_of(head_end(l));
        auto w = a == u ? b : a;
        if (!seen[w]) {
          seen[w]    = 1;
          in_tree[l] = 1;
          q.push_back(w);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw Error("complex is disconnected");
    GroupPresentation g;
    for (std::uint32_t l = 0; l < p.num_labels(); ++l) {
      (in_tree[l] ? g.tree : g.generators).push_back(p.label_name(l));
    }
    for (auto const& t : p.triangles()) {
      std::vector<SignedLabel> r;
      for (auto const& s : t.sides()) {
        if (!in_tree[p.label_id(s.name)])
          r.push_back(s);
      }
      g.relators.push_back(r);
    }
    return g;
  }

  std::string to_string(NerveType t) {
    switch (t) {
      case NerveType::S:
        return "S";
      case NerveType::T:
        return "T";
      default:
        return "other";
    }
  }

  std::string Nerve::to_dot() const {
    std::string out = "graph nerve {\n";
    for (auto const& v : vertices)
      out += "  \"" + v + "\";\n";
    for (auto const& [u, v] : edges)
      out += "  \"" + u + "\" -- \"" + v + "\";\n";
    return out + "}\n";
  }

  namespace {
    using EdgeBag = std::multiset<std::pair<std::size_t, std::size_t>>;

    EdgeBag bag(std::vector<std::pair<std::size_t, std::size_t>> const& es,
                std::array<std::size_t, 4> const&                       perm) {
      EdgeBag b;
      for (auto [u, v] : es)
        b.insert(std::minmax(perm[u], perm[v]));
      return b;
    }

    bool matches(std::vector<std::pair<std::size_t, std::size_t>> const& es,
                 EdgeBag const&                                          ref) {
      std::array<std::size_t, 4> perm{0, 1, 2, 3};
      do {
        if (bag(es, perm) == ref)
          return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    }
  }  // namespace

  Nerve nerve(Presentation const& collar) {
    std::set<std::string, NaturalLess> strands, horizontal;
    for (auto const& t : collar.triangles()) {
      strands.insert(t[0].name);
      horizontal.insert(t[1].name);
      horizontal.insert(t[2].name);
    }
    for (auto const& s : strands) {
      if (horizontal.count(s))
        throw Error("triangle not in collar shape: " + s
                    + " is both a strand and a horizontal edge");
    }
    Nerve n;
    n.vertices.assign(horizontal.begin(), horizontal.end());
    std::map<std::string, std::size_t> idx;
    for (auto const& v : n.vertices)
      idx.emplace(v, idx.size());
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (auto const& t : collar.triangles()) {
      n.edges.emplace_back(t[1].name, t[2].name);
      es.emplace_back(idx[t[1].name], idx[t[2].name]);
    }
    if (n.vertices.size() == 4 && es.size() == 6) {
      // a=0 b=1 c=2 d=3
      EdgeBag s{{0, 3}, {0, 3}, {1, 2}, {1, 2}, {2, 3}, {0, 1}};
      EdgeBag k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
      if (matches(es, s))
        n.type = NerveType::S;
      else if (matches(es, k4))
        n.type = NerveType::T;
    }
    return n;
  }

}  // namespace rank74
