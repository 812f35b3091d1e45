#pragma once

#include <map>
#include <optional>
#include <string>

#include "rank74/presentation.hpp"

namespace rank74 {

  // label name of the source -> signed label of the target
  using LabelMap = std::map<std::string, SignedLabel, NaturalLess>;

  // Exhaustive search for a sign-respecting label bijection carrying the
  // triangles of p1 onto those of p2 and extending the constraints.
  // Throws Error if the constraints are themselves inconsistent.
  std::optional<LabelMap> complex_isomorphic(Presentation const& p1,
                                             Presentation const& p2,
                                             LabelMap const& constraints = {});

  // image of a triangle under a label map
  Triangle relabel(LabelMap const& m, Triangle const& t);
  SignedLabel relabel(LabelMap const& m, SignedLabel const& l);

}  // namespace rank74
