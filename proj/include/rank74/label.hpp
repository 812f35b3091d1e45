#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace rank74 {

  // Orders strings so that digit runs compare numerically: "2" < "11" < "x".
  int  natural_compare(std::string_view a, std::string_view b);
  bool natural_less(std::string_view a, std::string_view b);

  struct NaturalLess {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const {
      return natural_less(a, b);
    }
  };

  struct SignedLabel {
    std::string name;
    bool        negative = false;

    SignedLabel() = default;
    SignedLabel(std::string n, bool neg = false);
    SignedLabel(char const* n) : SignedLabel(std::string(n)) {}

    SignedLabel operator-() const {
      return SignedLabel(name, !negative);
    }
    // multiplies signs
    SignedLabel times(bool flip) const {
      return SignedLabel(name, negative != flip);
    }
    std::string str() const {
      return negative ? "-" + name : name;
    }

    // "x", "-x", "+x"; throws ParseError
    static SignedLabel parse(std::string_view);

    friend bool operator==(SignedLabel const&, SignedLabel const&) = default;
    friend std::strong_ordering operator<=>(SignedLabel const& a,
                                            SignedLabel const& b);
  };

  std::ostream& operator<<(std::ostream&, SignedLabel const&);

  // Boundary word s0 s1 s2; side i runs from corner i to corner i+1.
  // Equality is up to rotation and inversion.
  class Triangle {
   public:
    Triangle() = default;
    Triangle(SignedLabel a, SignedLabel b, SignedLabel c)
        : _sides{std::move(a), std::move(b), std::move(c)} {}

    SignedLabel const& operator[](std::size_t i) const {
      return _sides[i % 3];
    }
    std::array<SignedLabel, 3> const& sides() const {
      return _sides;
    }

    Triangle rotated(std::size_t k) const;
    // reverse the word and negate every side
    Triangle inverted() const;
    // least of the six rotations/inversions
    Triangle normalized() const;
    bool     has_repeated_label() const;
    bool     identical(Triangle const& that) const {
      return _sides == that._sides;
    }
    std::string str() const;

    friend bool operator==(Triangle const& a, Triangle const& b);

   private:
    std::array<SignedLabel, 3> _sides;
  };

  std::ostream& operator<<(std::ostream&, Triangle const&);

}  // namespace rank74
