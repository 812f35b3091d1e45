#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "rank74/complex.hpp"
#include "rank74/presentation.hpp"

namespace rank74 {

  // One triangle of a gallery, read in the orientation `inverted` says, entered
  // through oriented side `entry` and left through side entry+off. off == 2
  // points the triangle up (side on the bottom), off == 1 points it down.
  struct GalleryStep {
    std::size_t   triangle;
    bool          inverted;
    std::uint8_t  entry;
    std::uint8_t  off;
    friend bool operator==(GalleryStep const&, GalleryStep const&) = default;
  };

  // side `x` of triangle t as read in the given orientation
  Side oriented_side(Presentation const& p, std::size_t t, bool inverted, std::size_t x);

  // Closed alternating gallery U D U D ... of height 1.
  struct Strip {
    std::vector<GalleryStep> path;  // starts with an up triangle
    std::size_t              period() const {
      return path.size() / 2;
    }
    bool degenerate() const {
      return path.size() == 2 && path[0].triangle == path[1].triangle;
    }
  };

  using CornerSet = std::array<Corner, 3>;  // sorted

  // A strip read with a choice of side (readings 0,1: bottom is the lower
  // boundary, 2,3: swapped) and direction (1,3 reverse the direction).
  struct StripReading {
    std::vector<Side>      bottom, top;
    std::vector<CornerSet> bottom_joints, top_joints;  // corners at the k-th vertex
  };

  StripReading reading(Presentation const& p, Strip const& s, std::size_t r);

  // re-check a gallery from scratch
  bool valid_strip(Presentation const& p, Strip const& s);

  struct StripList {
    std::vector<Strip> strips;
    bool               complete = true;
  };

  // all strips of period <= max_period, up to rotation and reversal
  StripList strips(Presentation const& p,
                   std::size_t         max_period,
                   std::size_t         budget = 20000000);

  // cyclic word up to rotation and inversion
  std::vector<Side> canonical_circle(std::vector<Side> const& w);
  // shortest u with w = u^k
  std::vector<Side> primitive_root(std::vector<Side> const& w);

  struct AnnulusNode {
    std::vector<Side> circle;  // canonical primitive word
    bool              geodesic = false;
  };

  struct AnnulusArc {
    std::size_t strip;
    std::size_t bottom, top;                  // node indices
    std::size_t bottom_winding, top_winding;  // multiplicity of the root
  };

  struct AnnulusGraph {
    std::vector<AnnulusNode> nodes;
    std::vector<AnnulusArc>  arcs;
    std::vector<Strip>       strips;
    bool                     complete = true;

    // node whose circle is w (any rotation/inversion/power), or SIZE_MAX
    std::size_t    find_node(std::vector<Side> const& w) const;
    nlohmann::json to_json(Presentation const& p) const;
  };

  AnnulusGraph annulus_graph(Presentation const& p,
                             std::size_t         L,
                             std::size_t         budget = 20000000);

  std::vector<SignedLabel> to_labels(Presentation const& p, std::vector<Side> const& w);
  std::vector<Side>        to_sides(Presentation const& p, std::vector<SignedLabel> const& w);

}  // namespace rank74
