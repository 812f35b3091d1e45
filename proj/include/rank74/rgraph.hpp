#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rank74/isomorphism.hpp"
#include "rank74/presentation.hpp"
#include "rank74/word.hpp"

namespace rank74 {

  // Two triangles glued along `diagonal` forming a rhombus whose opposite
  // sides `waist` carry the same label; gluing them gives an annulus with
  // boundary circles `boundary`.
  struct Cylinder {
    std::array<Occurrence, 2>  diagonal;
    std::array<Occurrence, 2>  waist;
    std::array<Occurrence, 2>  boundary;
    std::array<SignedLabel, 2> boundary_labels;
    SignedLabel                waist_label;
    bool                       degenerate = false;
  };

  std::vector<Cylinder> cylinders(Presentation const& p);

  struct RGraph {
    std::vector<std::string> vertices;  // natural order
    std::vector<Cylinder>    edges;

    std::pair<std::string, std::string> endpoints(std::size_t e) const;
    bool                                is_loop(std::size_t e) const;
    std::size_t                         vertex_index(std::string const& v) const;
    // unordered endpoint pairs, (min, max) in natural order
    std::multiset<std::pair<std::string, std::string>> edge_multiset() const;

    nlohmann::json to_json() const;
    std::string    to_dot(std::string const& name = "R") const;
  };

  RGraph r_graph(Presentation const& p);
  // graph of the composite cobordism (not closed up)
  RGraph r_graph(Word const& w);

  // edge multiset of a graph written by RGraph::to_dot
  std::multiset<std::pair<std::string, std::string>>
  parse_rgraph_dot(std::string const& dot);

  using EdgeMultiset = std::multiset<std::pair<std::string, std::string>>;
  // [["u","v"],...] or the "edges" of RGraph::to_json
  EdgeMultiset edge_multiset(nlohmann::json const& edges);

  struct Embedding {
    std::map<std::string, std::string, NaturalLess> vertices;
    std::vector<std::size_t>                        edges;  // sub edge -> edge
    LabelMap                                        labels;  // all body labels
  };

  // R(w[first..last]) -> R(w), positions counted from 1, both inclusive.
  Embedding subword_embedding(Word const& w, std::size_t first, std::size_t last);

  struct CycleWitness {
    std::vector<std::size_t> edges;
    std::vector<std::string> vertices;  // vertices[i] is where edges[i] starts
    bool                     loop_supported       = false;
    bool                     consecutive_distinct = true;

    std::size_t           size() const {
      return edges.size();
    }
    std::set<std::size_t> support() const {
      return {edges.begin(), edges.end()};
    }
    nlohmann::json to_json(RGraph const& g) const;
  };

  // recompute the flags; throws if the sequence is not a closed walk in g
  CycleWitness make_cycle(RGraph const&                   g,
                          std::vector<std::size_t> const& edges,
                          std::string const&              start);

  struct CycleSearch {
    std::size_t max_len            = 12;
    std::size_t max_count          = 20000;
    bool        include_degenerate = true;
  };

  struct CycleList {
    std::vector<CycleWitness> cycles;
    bool                      complete = true;  // false if a bound was hit
  };

  CycleList find_cycles(RGraph const& g, CycleSearch const& s);

  // Primitive closed walks without immediate edge repetition (cyclically),
  // not supported on a single loop, up to rotation and reversal; shortest
  // first.
  std::vector<CycleWitness> nonloop_cycles(RGraph const&      g,
                                           CycleSearch const& s = {});
  inline std::vector<CycleWitness> nonloop_cycles(RGraph const& g,
                                                  std::size_t   max_len) {
    CycleSearch s;
    s.max_len = max_len;
    return nonloop_cycles(g, s);
  }

  // two non-loop cycles with different supports and a common vertex
  std::optional<std::pair<CycleWitness, CycleWitness>>
  intersecting_cycle_pair(RGraph const& g, CycleSearch const& s = {});

}  // namespace rank74
