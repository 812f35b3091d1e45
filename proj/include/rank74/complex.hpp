#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "rank74/graph.hpp"
#include "rank74/presentation.hpp"

namespace rank74 {

  // Directed edge-ends are numbered 2*label (tail) and 2*label+1 (head).
  inline std::size_t tail_end(std::uint32_t label) {
    return 2 * std::size_t(label);
  }
  inline std::size_t head_end(std::uint32_t label) {
    return 2 * std::size_t(label) + 1;
  }
  // the end a side starts from / arrives at when read along the triangle
  inline std::size_t start_end(Side s) {
    return s.negative ? head_end(s.label) : tail_end(s.label);
  }
  inline std::size_t finish_end(Side s) {
    return s.negative ? tail_end(s.label) : head_end(s.label);
  }
  std::string end_name(Presentation const& p, std::size_t end);

  // Corner v of triangle t sits between side v-1 and side v.
  struct Corner {
    std::size_t triangle;
    std::size_t vertex;
    friend auto operator<=>(Corner const&, Corner const&) = default;
  };
  // the two edge-ends a corner joins in its vertex link
  std::pair<std::size_t, std::size_t> corner_ends(Presentation const& p,
                                                  Corner                c);

  class VertexPartition {
   public:
    VertexPartition() = default;
    explicit VertexPartition(Presentation const& p);

    std::size_t size() const {
      return _members.size();
    }
    std::size_t class_of(std::size_t end) const {
      return _class.at(end);
    }
    std::vector<std::size_t> const& members(std::size_t cls) const {
      return _members.at(cls);
    }

   private:
    std::vector<std::size_t>              _class;
    std::vector<std::vector<std::size_t>> _members;
  };

  VertexPartition vertex_partition(Presentation const& p);

  struct LinkGraph {
    std::size_t              vertex_class = 0;
    std::vector<std::size_t> ends;     // global end ids, sorted
    std::vector<Corner>      corners;  // one per link edge
    Graph                    graph;    // on positions in ends
    std::size_t              local(std::size_t end) const;
    std::string              to_dot(Presentation const& p) const;
  };

  LinkGraph link_graph(Presentation const&    p,
                       VertexPartition const& vp,
                       std::size_t            vertex_class);

  bool is_moebius_kantor(LinkGraph const& g);

  // Vertex partition plus all-pairs link distances, for repeated queries.
  class LinkOracle {
   public:
    explicit LinkOracle(Presentation const& p);
    VertexPartition const& partition() const {
      return _vp;
    }
    LinkGraph const& link(std::size_t cls) const {
      return _links.at(cls);
    }
    // SIZE_MAX if the ends lie at different vertices or are disconnected
    std::size_t distance(std::size_t end_a, std::size_t end_b) const;

   private:
    VertexPartition                                    _vp;
    std::vector<LinkGraph>                             _links;
    std::vector<std::vector<std::vector<std::size_t>>> _dist;
  };

  // Link distance at each junction of a cyclic edge path, junction i being
  // between path[i] and path[i+1]. Throws if the path is not composable.
  std::vector<std::size_t> junction_distances(LinkOracle const&               o,
                                              Presentation const&             p,
                                              std::vector<SignedLabel> const& path);
  bool local_geodesic_check(Presentation const&             p,
                            std::vector<SignedLabel> const& path);
  bool local_geodesic_check(LinkOracle const&               o,
                            Presentation const&             p,
                            std::vector<SignedLabel> const& path);

  struct GroupPresentation {
    std::vector<std::string>              generators;
    std::vector<std::string>              tree;
    std::vector<std::vector<SignedLabel>> relators;
    std::size_t                           abelianization_rank() const;
    nlohmann::json                        to_json() const;
  };

  GroupPresentation group_presentation(Presentation const& p);

  enum class NerveType { S, T, other };
  std::string to_string(NerveType);

  struct Nerve {
    std::vector<std::string>                         vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    NerveType                                        type = NerveType::other;
    std::string                                      to_dot() const;
  };

  Nerve nerve(Presentation const& collar);

}  // namespace rank74
