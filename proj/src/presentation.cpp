#include "rank74/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "rank74/error.hpp"

namespace rank74 {

  Presentation::Presentation(std::vector<Triangle> triangles)
      : _triangles(std::move(triangles)) {
    std::set<std::string, NaturalLess> names;
    for (auto const& t : _triangles)
      for (auto const& s : t.sides())
        names.insert(s.name);
    _labels.assign(names.begin(), names.end());
    for (std::uint32_t i = 0; i < _labels.size(); ++i)
      _index.emplace(_labels[i], i);
    _occ.resize(_labels.size());
    _sides.reserve(3 * _triangles.size());
    for (std::size_t t = 0; t < _triangles.size(); ++t) {
      for (std::size_t i = 0; i < 3; ++i) {
        auto const& s  = _triangles[t][i];
        auto        id = _index.at(s.name);
        _sides.push_back({id, s.negative});
        _occ[id].push_back({t, i});
      }
    }
  }

  std::optional<std::uint32_t>
  Presentation::find_label(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end())
      return std::nullopt;
    return it->second;
  }

  std::uint32_t Presentation::label_id(std::string_view name) const {
    auto id = find_label(name);
    if (!id)
      throw Error("unknown label " + std::string(name));
    return *id;
  }

  std::size_t Presentation::arity(std::string_view name) const {
    auto id = find_label(name);
    return id ? _occ[*id].size() : 0;
  }

  Side Presentation::to_side(SignedLabel const& l) const {
    return {label_id(l.name), l.negative};
  }

  bool Presentation::same_triangles(Presentation const& that) const {
    if (size() != that.size())
      return false;
    auto key = [](Presentation const& p) {
      std::vector<std::string> out;
      for (auto const& t : p.triangles())
        out.push_back(t.normalized().str());
      std::sort(out.begin(), out.end());
      return out;
    };
    return key(*this) == key(that);
  }

  namespace {
    bool is_label_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '\''
             || c == '_' || c == '#' || c == '-' || c == '+';
    }
  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    std::vector<Triangle> tris;
    std::size_t           i    = 0;
    auto                  skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    };
    auto expect = [&](char c) {
      skip();
      if (i >= text.size() || text[i] != c) {
        throw ParseError(std::string("expected '") + c + "'", i);
      }
      ++i;
    };
    skip();
    if (i == text.size())
      throw ParseError("empty input", 0);
    while (true) {
      expect('(');
      skip();
      if (i < text.size() && text[i] == ')')
        throw ParseError("empty triple", i);
      std::vector<SignedLabel> sides;
      while (true) {
        skip();
        std::size_t start = i;
        while (i < text.size() && is_label_char(text[i]))
          ++i;
        if (start == i)
          throw ParseError("expected label", i);
        try {
          sides.push_back(SignedLabel::parse(text.substr(start, i - start)));
        } catch (ParseError const& e) {
          throw ParseError(std::string(e.what()).substr(
                               0, std::string(e.what()).find(" at position")),
                           start + e.position());
        }
        skip();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
      if (sides.size() != 3)
        throw ParseError("triple must have 3 sides, got "
                             + std::to_string(sides.size()),
                         i);
      expect(')');
      tris.emplace_back(sides[0], sides[1], sides[2]);
      skip();
      if (i == text.size())
        break;
      expect(',');
    }
    return Presentation(std::move(tris));
  }

  std::string to_text(Presentation const& p) {
    std::string out;
    for (auto const& t : p.triangles()) {
      if (!out.empty())
        out += ',';
      out += t.str();
    }
    return out;
  }

  std::string normalize_text(std::string_view text) {
    std::string out;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == '+')
        continue;
      out += c;
    }
    return out;
  }

  nlohmann::json to_json(Presentation const& p) {
    auto arr = nlohmann::json::array();
    for (auto const& t : p.triangles()) {
      arr.push_back({t[0].str(), t[1].str(), t[2].str()});
    }
    return {{"triangles", arr}};
  }

  Presentation presentation_from_json(nlohmann::json const& j) {
    if (!j.contains("triangles") || !j["triangles"].is_array())
      throw Error("presentation JSON needs a \"triangles\" array");
    std::vector<Triangle> tris;
    for (auto const& t : j["triangles"]) {
      if (!t.is_array() || t.size() != 3)
        throw Error("each triangle must be an array of 3 labels");
      tris.emplace_back(SignedLabel::parse(t[0].get<std::string>()),
                        SignedLabel::parse(t[1].get<std::string>()),
                        SignedLabel::parse(t[2].get<std::string>()));
    }
    return Presentation(std::move(tris));
  }

  nlohmann::json ValidationReport::to_json() const {
    nlohmann::json a = nlohmann::json::object();
    for (auto const& [k, v] : arity)
      a[k] = v;
    return {{"valid", valid}, {"arity", a}, {"violations", violations}};
  }

  ValidationReport validate(Presentation const& p, Mode mode) {
    ValidationReport r;
    for (auto const& name : p.labels())
      r.arity[name] = p.arity(name);
    static std::set<std::string> const strands
        = {"x", "y", "z", "x'", "y'", "z'"};
    for (auto const& [name, n] : r.arity) {
      std::size_t want = 3;
      if (mode == Mode::cobordism && strands.count(name))
        want = 1;
      if (n != want) {
        r.valid = false;
        r.violations.push_back("label " + name + " occurs "
                               + std::to_string(n) + " times, expected "
                               + std::to_string(want));
      }
    }
    if (mode == Mode::cobordism) {
      for (auto const& s : strands) {
        if (!r.arity.count(s)) {
          r.valid = false;
          r.violations.push_back("boundary label " + s + " missing");
        }
      }
    }
    return r;
  }

}  // namespace rank74
