#include "rank74/graph.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <deque>
#include <set>

namespace rank74 {

  std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(n, 0);
    for (auto [u, v] : edges) {
      ++d[u];
      ++d[v];
    }
    return d;
  }

  std::vector<std::vector<std::size_t>> Graph::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      if (u != v)
        adj[v].push_back(u);
    }
    return adj;
  }

  bool Graph::is_simple() const {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [u, v] : edges) {
      if (u == v || !seen.insert(std::minmax(u, v)).second)
        return false;
    }
    return true;
  }

  bool Graph::is_bipartite() const {
    auto             adj = adjacency();
    std::vector<int> col(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
      if (col[s] != -1)
        continue;
      col[s] = 0;
      std::deque<std::size_t> q{s};
      while (!q.empty()) {
        auto u = q.front();
        q.pop_front();
        for (auto v : adj[u]) {
          if (col[v] == -1) {
            col[v] = 1 - col[u];
            q.push_back(v);
          } else if (col[v] == col[u]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::size_t Graph::girth() const {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [u, v] : edges) {
      if (u == v)
        return 1;
      if (!seen.insert(std::minmax(u, v)).second)
        return 2;
    }
    // BFS from every vertex, tracking the tree edge used
    auto        adj  = adjacency();
    std::size_t best = SIZE_MAX;
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> dist(n, SIZE_MAX), parent(n, SIZE_MAX);
      dist[s] = 0;
      std::deque<std::size_t> q{s};
      while (!q.empty()) {
        auto u = q.front();
        q.pop_front();
        for (auto v : adj[u]) {
          if (dist[v] == SIZE_MAX) {
            dist[v]   = dist[u] + 1;
            parent[v] = u;
            q.push_back(v);
          } else if (parent[u] != v) {
            best = std::min(best, dist[u] + dist[v] + 1);
          }
        }
      }
    }
    return best == SIZE_MAX ? 0 : best;
  }

  std::vector<std::size_t> Graph::distances(std::size_t s) const {
    auto                     adj = adjacency();
    std::vector<std::size_t> dist(n, SIZE_MAX);
    dist[s] = 0;
    std::deque<std::size_t> q{s};
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (auto v : adj[u]) {
        if (dist[v] == SIZE_MAX) {
          dist[v] = dist[u] + 1;
          q.push_back(v);
        }
      }
    }
    return dist;
  }

  bool Graph::connected() const {
    if (n == 0)
      return true;
    auto d = distances(0);
    return std::none_of(
        d.begin(), d.end(), [](std::size_t x) { return x == SIZE_MAX; });
  }

  Graph generalized_petersen(std::size_t n, std::size_t k) {
    // outer i, inner n + i
    Graph g(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      g.add_edge(i, (i + 1) % n);
      g.add_edge(i, n + i);
      if (2 * k != n || i < (i + k) % n)
        g.add_edge(n + i, n + (i + k) % n);
    }
    return g;
  }

  Graph moebius_kantor() {
    return generalized_petersen(8, 3);
  }

  namespace {

    struct IsoSearch {
      std::vector<std::vector<char>>        ma, mb;
      std::vector<std::vector<std::size_t>> adja, adjb;
      std::vector<std::size_t>              order, map, inv;
      std::vector<std::size_t>              dega, degb;

      bool extend(std::size_t k) {
        if (k == order.size())
          return true;
        auto u = order[k];
        for (std::size_t v = 0; v < mb.size(); ++v) {
          if (inv[v] != SIZE_MAX || dega[u] != degb[v])
            continue;
          bool ok = true;
          for (std::size_t j = 0; j < k && ok; ++j) {
            auto w = order[j];
            ok     = ma[u][w] == mb[v][map[w]];
          }
          if (!ok)
            continue;
          map[u] = v;
          inv[v] = u;
          if (extend(k + 1))
            return true;
          map[u] = SIZE_MAX;
          inv[v] = SIZE_MAX;
        }
        return false;
      }
    };

  }  // namespace

  std::optional<std::vector<std::size_t>> find_isomorphism(Graph const& a,
                                                           Graph const& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size() || !a.is_simple()
        || !b.is_simple())
      return std::nullopt;
    IsoSearch s;
    s.dega = a.degrees();
    s.degb = b.degrees();
    {
      auto da = s.dega, db = s.degb;
      std::sort(da.begin(), da.end());
      std::sort(db.begin(), db.end());
      if (da != db)
        return std::nullopt;
    }
    s.ma.assign(a.n, std::vector<char>(a.n, 0));
    s.mb.assign(b.n, std::vector<char>(b.n, 0));
    for (auto [u, v] : a.edges)
      s.ma[u][v] = s.ma[v][u] = 1;
    for (auto [u, v] : b.edges)
      s.mb[u][v] = s.mb[v][u] = 1;
    // BFS order keeps each new vertex adjacent to a mapped one
    std::vector<char> seen(a.n, 0);
    auto              adj = a.adjacency();
    for (std::size_t r = 0; r < a.n; ++r) {
      if (seen[r])
        continue;
      seen[r] = 1;
      std::deque<std::size_t> q{r};
      while (!q.empty()) {
        auto u = q.front();
        q.pop_front();
        s.order.push_back(u);
        for (auto v : adj[u]) {
          if (!seen[v]) {
            seen[v] = 1;
            q.push_back(v);
          }
        }
      }
    }
    s.map.assign(a.n, SIZE_MAX);
    s.inv.assign(b.n, SIZE_MAX);
    if (!s.extend(0))
      return std::nullopt;
    return s.map;
  }

  bool is_moebius_kantor(Graph const& g) {
    if (g.n != 16 || g.edges.size() != 24 || !g.is_simple())
      return false;
    auto d = g.degrees();
    if (std::any_of(d.begin(), d.end(), [](std::size_t x) { return x != 3; }))
      return false;
    if (!g.is_bipartite() || g.girth() != 6 || !g.connected())
      return false;
    return find_isomorphism(g, moebius_kantor()).has_value();
  }

}  // namespace rank74
