#include "rank74/label.hpp"

#include <algorithm>
#include <cctype>

#include "rank74/error.hpp"

namespace rank74 {

  int natural_compare(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      bool da = std::isdigit(static_cast<unsigned char>(a[i]));
      bool db = std::isdigit(static_cast<unsigned char>(b[j]));
      if (da && db) {
        std::size_t ei = i, ej = j;
        while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei])))
          ++ei;
        while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej])))
          ++ej;
        auto na = a.substr(i, ei - i), nb = b.substr(j, ej - j);
        // strip leading zeros for the numeric comparison
        auto sa = na.find_first_not_of('0'), sb = nb.find_first_not_of('0');
        na = sa == std::string_view::npos ? "" : na.substr(sa);
        nb = sb == std::string_view::npos ? "" : nb.substr(sb);
        if (na.size() != nb.size())
          return na.size() < nb.size() ? -1 : 1;
        if (int c = na.compare(nb); c != 0)
          return c < 0 ? -1 : 1;
        if (ei - i != ej - j)
          return (ei - i) < (ej - j) ? -1 : 1;
        i = ei;
        j = ej;
      } else if (da != db) {
        return da ? -1 : 1;  // numbers before letters
      } else {
        if (a[i] != b[j])
          return a[i] < b[j] ? -1 : 1;
        ++i;
        ++j;
      }
    }
    if (i < a.size())
      return 1;
    if (j < b.size())
      return -1;
    return 0;
  }

  bool natural_less(std::string_view a, std::string_view b) {
    return natural_compare(a, b) < 0;
  }

  SignedLabel::SignedLabel(std::string n, bool neg)
      : name(std::move(n)), negative(neg) {
    if (name.empty())
      throw Error("empty label name");
  }

  SignedLabel SignedLabel::parse(std::string_view s) {
    bool        neg = false;
    std::size_t i   = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i == s.size())
      throw ParseError("missing label name", i);
    for (std::size_t k = i; k < s.size(); ++k) {
      char c = s[k];
      if (c == '-' || c == '+')
        throw ParseError("malformed sign", k);
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '\''
            || c == '_' || c == '#'))
        throw ParseError(std::string("unexpected character '") + c + "'", k);
    }
    return SignedLabel(std::string(s.substr(i)), neg);
  }

  std::strong_ordering operator<=>(SignedLabel const& a, SignedLabel const& b) {
    int c = natural_compare(a.name, b.name);
    if (c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.negative <=> b.negative;
  }

  std::ostream& operator<<(std::ostream& os, SignedLabel const& l) {
    return os << l.str();
  }

  Triangle Triangle::rotated(std::size_t k) const {
    return Triangle((*this)[k], (*this)[k + 1], (*this)[k + 2]);
  }

  Triangle Triangle::inverted() const {
    return Triangle(-_sides[2], -_sides[1], -_sides[0]);
  }

  Triangle Triangle::normalized() const {
    Triangle best = *this;
    auto     less = [](Triangle const& a, Triangle const& b) {
      return std::lexicographical_compare(
          a._sides.begin(), a._sides.end(), b._sides.begin(), b._sides.end());
    };
    Triangle inv = inverted();
    for (std::size_t k = 0; k < 3; ++k) {
      for (Triangle const& t : {rotated(k), inv.rotated(k)}) {
        if (less(t, best))
          best = t;
      }
    }
    return best;
  }

  bool Triangle::has_repeated_label() const {
    return _sides[0].name == _sides[1].name || _sides[1].name == _sides[2].name
           || _sides[0].name == _sides[2].name;
  }

  std::string Triangle::str() const {
    return "(" + _sides[0].str() + "," + _sides[1].str() + ","
           + _sides[2].str() + ")";
  }

  bool operator==(Triangle const& a, Triangle const& b) {
    return a.normalized()._sides == b.normalized()._sides;
  }

  std::ostream& operator<<(std::ostream& os, Triangle const& t) {
    return os << t.str();
  }

}  // namespace rank74
