#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rank74 {

  // Undirected multigraph on 0..n-1; loops allowed.
  struct Graph {
    std::size_t                                      n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    Graph() = default;
    explicit Graph(std::size_t nr) : n(nr) {}
    void add_edge(std::size_t u, std::size_t v) {
      edges.emplace_back(u, v);
    }
    // loops count twice
    std::vector<std::size_t>              degrees() const;
    std::vector<std::vector<std::size_t>> adjacency() const;
    bool                                  is_simple() const;
    bool                                  is_bipartite() const;
    // 0 if acyclic; loops give 1, parallel edges 2
    std::size_t girth() const;
    // BFS distances from s, SIZE_MAX when unreachable
    std::vector<std::size_t> distances(std::size_t s) const;
    bool                     connected() const;
  };

  Graph generalized_petersen(std::size_t n, std::size_t k);
  Graph moebius_kantor();

  // Backtracking isomorphism of simple graphs; returns the image of each
  // vertex of a.
  std::optional<std::vector<std::size_t>> find_isomorphism(Graph const& a,
                                                           Graph const& b);

  bool is_moebius_kantor(Graph const& g);

}  // namespace rank74
