#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rank74/label.hpp"

namespace rank74 {

  struct Occurrence {
    std::size_t triangle;
    std::size_t position;
    friend auto operator<=>(Occurrence const&, Occurrence const&) = default;
  };

  // Interned side: label index into Presentation::labels().
  struct Side {
    std::uint32_t label;
    bool          negative;
    Side          operator-() const {
      return {label, !negative};
    }
    friend bool operator==(Side const&, Side const&) = default;
    friend auto operator<=>(Side const&, Side const&) = default;
  };

  // A 2-complex given by oriented labelled triangles glued along equal labels.
  class Presentation {
   public:
    Presentation() = default;
    explicit Presentation(std::vector<Triangle> triangles);

    std::size_t size() const {
      return _triangles.size();
    }
    std::vector<Triangle> const& triangles() const {
      return _triangles;
    }
    Triangle const& triangle(std::size_t i) const {
      return _triangles.at(i);
    }

    // label names in natural order; a label's id is its index here
    std::vector<std::string> const& labels() const {
      return _labels;
    }
    std::size_t num_labels() const {
      return _labels.size();
    }
    std::string const& label_name(std::uint32_t id) const {
      return _labels.at(id);
    }
    std::optional<std::uint32_t> find_label(std::string_view name) const;
    std::uint32_t                label_id(std::string_view name) const;
    bool                         has_label(std::string_view name) const {
      return find_label(name).has_value();
    }

    std::vector<Occurrence> const& occurrences(std::uint32_t id) const {
      return _occ.at(id);
    }
    std::size_t arity(std::string_view name) const;

    Side side(std::size_t t, std::size_t i) const {
      return _sides[3 * t + i % 3];
    }
    Side        to_side(SignedLabel const& l) const;
    SignedLabel to_label(Side s) const {
      return SignedLabel(_labels[s.label], s.negative);
    }

    // same triangle multiset, each triangle up to rotation/inversion
    bool same_triangles(Presentation const& that) const;

   private:
    std::vector<Triangle>                _triangles;
    std::vector<std::string>             _labels;
    std::map<std::string, std::uint32_t> _index;
    std::vector<std::vector<Occurrence>> _occ;
    std::vector<Side>                    _sides;
  };

  // "(x,a,d),(y,-c,d)"; whitespace ignored, '+' accepted
  Presentation parse_presentation(std::string_view text);
  std::string  to_text(Presentation const& p);
  // strips whitespace and explicit '+' signs
  std::string normalize_text(std::string_view text);

  nlohmann::json to_json(Presentation const& p);
  Presentation   presentation_from_json(nlohmann::json const& j);

  enum class Mode { closed, cobordism };

  struct ValidationReport {
    bool                                           valid = true;
    std::map<std::string, std::size_t, NaturalLess> arity;
    std::vector<std::string>                       violations;
    nlohmann::json                                 to_json() const;
  };

  ValidationReport validate(Presentation const& p, Mode mode);

}  // namespace rank74
