#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "rank74/isomorphism.hpp"
#include "rank74/presentation.hpp"
#include "rank74/word.hpp"

namespace rank74 {

  namespace collar {
    // the ten labels of C, in the order used by BoundaryMap
    std::array<std::string, 10> const& labels();
    std::size_t                        index(std::string const& name);
    bool                               is_strand(std::string const& name);
    Presentation const&                presentation();
  }  // namespace collar

  // the involution of C; throws on a label outside C
  SignedLabel sigma(SignedLabel const& l);
  SignedLabel sigma(SignedLabel const& l, bool twist);

  using BoundaryMap = std::array<SignedLabel, 10>;

  struct Cobordism {
    Presentation body;
    BoundaryMap  left;
    BoundaryMap  right;

    SignedLabel left_image(SignedLabel const& c) const;
    SignedLabel right_image(SignedLabel const& c) const;
    // collar copies as body triangles
    std::vector<Triangle> left_collar() const;
    std::vector<Triangle> right_collar() const;
  };

  // body-label constraints phi(a.left(c)) = b.left(c), phi(a.right(c)) =
  // b.right(c) for complex_isomorphic
  LabelMap boundary_constraints(Cobordism const& a, Cobordism const& b);

  bool equivalent_cobordisms(Cobordism const& a, Cobordism const& b);

  Cobordism generator_cobordism(Generator g);

  // Where an operand triangle went: the image of the operand triangle under
  // the label map equals result[index], rotated by `rotation` after an
  // optional inversion.
  struct TriangleImage {
    std::size_t index    = 0;
    std::size_t rotation = 0;
    bool        inverted = false;
  };
  Triangle    aligned(Triangle const& t, TriangleImage const& im);
  Occurrence  image_occurrence(TriangleImage const& im, std::size_t position);

  struct Composition {
    Cobordism                  result;
    LabelMap                   from_a, from_b;
    std::vector<TriangleImage> tri_a, tri_b;
  };

  Composition compose_traced(Cobordism const& a, Cobordism const& b, bool twist);
  Cobordism   compose(Cobordism const& a, Cobordism const& b, bool twist);

  struct Closure {
    Presentation               complex;
    LabelMap                   labels;
    std::vector<TriangleImage> triangles;
  };

  Closure      close_up_traced(Cobordism const& c);
  Presentation close_up(Cobordism const& c);
  Presentation close_up(Word const& w);

  // Composite cobordism of a word under the fresh-label scheme: letter k
  // (from 1) owns interior labels 10(k-1)+{1..4} and left horizontals
  // 10(k-1)+{5..8} for a,d,c,b; the last right collar uses 10n+{5..8}.
  struct WordBody {
    Word                                    word;
    Cobordism                               cob;
    std::vector<LabelMap>                   letter_labels;
    std::vector<std::vector<TriangleImage>> letter_triangles;
  };

  WordBody  word_body(Word const& w);
  Cobordism word_cobordism(Word const& w);

}  // namespace rank74
