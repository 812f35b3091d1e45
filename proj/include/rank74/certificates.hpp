#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rank74/isomorphism.hpp"
#include "rank74/rgraph.hpp"
#include "rank74/strips.hpp"
#include "rank74/word.hpp"

namespace rank74 {

  // ---- forbidden patterns

  struct PatternMatch {
    char        pattern;   // 'a'..'d'
    std::size_t position;  // first letter, 0-based, in the scanned word
    std::size_t rotation;  // rotation of the word in which the match is linear
    nlohmann::json to_json() const;
  };

  // (a) YY  (b) XXX, both inner bits 1  (c) XYXYX  (d) XYXXYX, middle bit 1;
  // read off the canonical chain. Cyclic scans wrap around but never use a
  // letter twice.
  std::vector<PatternMatch> forbidden_pattern_scan(Word const& w, bool cyclic = true);

  // ---- Z^2

  struct PlacedStrip {
    Strip       strip;
    std::size_t reading = 0;
    std::size_t shift   = 0;  // top of the previous strip = bottom of this one, rotated
  };

  // A flat torus: strips stacked in a cycle, each top glued to the next bottom.
  struct TorusWitness {
    std::string                 route;  // "rgraph" or "annulus"
    Word                        word;
    std::size_t                 rotation = 0;  // lives in close_up(rotations(word)[rotation])
    std::optional<CycleWitness> cycle;         // R-graph cycle, rgraph route only
    std::vector<PlacedStrip>    strips;

    nlohmann::json to_json(Presentation const& p) const;
  };

  TorusWitness torus_from_json(nlohmann::json const& j);

  struct Z2Bounds {
    std::size_t max_cycle  = 12;
    std::size_t max_cycles = 500;   // R-graph cycles tried per rotation
    std::size_t annulus_L  = 8;
    std::size_t budget     = 20000000;  // gallery steps per strip enumeration
  };

  struct Z2Result {
    std::optional<TorusWitness> witness;
    Z2Bounds                    bounds;
    std::size_t                 annulus_L_used = 0;
    bool                        conclusive() const {
      return witness.has_value();
    }
  };

  Z2Result z2_certificate(Word const& w, Z2Bounds const& bounds = {});

  // Independent re-check against p: galleries, joints, link 6-cycles, Euler
  // characteristic.
  bool verify_torus(TorusWitness const& t, Presentation const& p);

  // move a witness on p1 to p2 along an isomorphism p1 -> p2
  TorusWitness transport(TorusWitness const& t,
                         Presentation const& p1,
                         Presentation const& p2,
                         LabelMap const&     phi);

  // the flat-joint search on a closed complex, periods up to L
  std::optional<std::vector<PlacedStrip>> flat_torus_search(Presentation const& p,
                                                            std::size_t         L,
                                                            std::size_t         budget,
                                                            bool*               complete = nullptr);

  // ---- exponential rank

  struct ExpRankWitness {
    std::size_t  rotation = 0;  // cycles live in R(rotations(word)[rotation])
    CycleWitness first, second;
    // s runs from vertex `join` along both cycles; each cycle is
    // s + gamma_y + gamma_x
    std::vector<std::size_t> shared;
    std::vector<std::size_t> gamma_x, gamma_y, gamma2_x, gamma2_y;
    std::string              join;

    nlohmann::json to_json(RGraph const& g) const;
  };

  struct ExpRankResult {
    std::optional<ExpRankWitness> witness;  // graph route
    std::vector<PatternMatch>     patterns;  // pattern route
    bool                          graph_route   = false;
    bool                          pattern_route = false;
    bool                          agree() const {
      return graph_route == pattern_route;
    }
    bool exists() const {
      return graph_route || pattern_route;
    }
  };

  ExpRankResult exp_rank_certificate(Word const& w, CycleSearch const& s = {});
  bool          verify_exp_rank(ExpRankWitness const& x, RGraph const& g);

  // ---- exponential mesoscopic rank

  struct MesoWitness {
    CanonicalWord canonical;
    std::size_t   rotation = 0;    // the representative is of rotations(word)[rotation]
    Word          representative;  // a representative with Y00.Y00.Y00 at `position`
    std::size_t   position = 0;    // 0-based
    bool          outer_cycle = false, geodesic_a = false, loop_b = false,
         strip_a1 = false;
    std::vector<std::string> outer;  // the six cycle vertices
    std::vector<SignedLabel> a;      // A in the closed complex of the representative
    std::string              b;
    bool                     all() const {
      return outer_cycle && geodesic_a && loop_b && strip_a1;
    }
    nlohmann::json to_json() const;
  };

  // a representative containing Y00.Y00.Y00, if the class has one
  std::optional<std::pair<Word, std::size_t>> omega0_representative(Word const& w);
  std::optional<MesoWitness>                  mesoscopic_certificate(Word const& w);

}  // namespace rank74
