#include "rank74/cobordism.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "rank74/error.hpp"

namespace rank74 {

  namespace collar {
    std::array<std::string, 10> const& labels() {
      static std::array<std::string, 10> const l
          = {"x", "y", "z", "x'", "y'", "z'", "a", "b", "c", "d"};
      return l;
    }

    std::size_t index(std::string const& name) {
      auto const& l  = labels();
      auto        it = std::find(l.begin(), l.end(), name);
      if (it == l.end())
        throw Error("label " + name + " is not a label of the collar");
      return it - l.begin();
    }

    bool is_strand(std::string const& name) {
      return index(name) < 6;
    }

    Presentation const& presentation() {
      static Presentation const c = parse_presentation(
          "(x,a,d),(y,c,d),(z,c,b),(x',d,a),(y',b,a),(z',b,c)");
      return c;
    }
  }  // namespace collar

  SignedLabel sigma(SignedLabel const& l) {
    static std::map<std::string, SignedLabel> const table
        = {{"y", {"y", true}},   {"y'", {"y'", true}}, {"x", {"z", true}},
           {"z", {"x", true}},   {"x'", {"z'", true}}, {"z'", {"x'", true}},
           {"a", {"b", true}},   {"b", {"a", true}},   {"c", {"d", true}},
           {"d", {"c", true}}};
    auto it = table.find(l.name);
    if (it == table.end())
      throw Error("sigma: unknown label " + l.name);
    return it->second.times(l.negative);
  }

  SignedLabel sigma(SignedLabel const& l, bool twist) {
    return twist ? sigma(l) : l;
  }

  SignedLabel Cobordism::left_image(SignedLabel const& c) const {
    return left[collar::index(c.name)].times(c.negative);
  }

  SignedLabel Cobordism::right_image(SignedLabel const& c) const {
    return right[collar::index(c.name)].times(c.negative);
  }

  namespace {
    std::vector<Triangle> collar_image(Cobordism const& cob, bool right) {
      std::vector<Triangle> out;
      for (auto const& t : collar::presentation().triangles()) {
        auto f = [&](SignedLabel const& l) {
          return right ? cob.right_image(l) : cob.left_image(l);
        };
        out.emplace_back(f(t[0]), f(t[1]), f(t[2]));
      }
      return out;
    }
  }  // namespace

  std::vector<Triangle> Cobordism::left_collar() const {
    return collar_image(*this, false);
  }

  std::vector<Triangle> Cobordism::right_collar() const {
    return collar_image(*this, true);
  }

  LabelMap boundary_constraints(Cobordism const& a, Cobordism const& b) {
    LabelMap m;
    auto add = [&](SignedLabel const& s, SignedLabel const& t) {
      // phi(s) = t, stored on the positive name
      SignedLabel img = t.times(s.negative);
      auto [it, fresh] = m.emplace(s.name, img);
      if (!fresh && !(it->second == img))
        throw Error("boundary constraints disagree on " + s.name);
    };
    for (std::size_t i = 0; i < 10; ++i) {
      add(a.left[i], b.left[i]);
      add(a.right[i], b.right[i]);
    }
    return m;
  }

  bool equivalent_cobordisms(Cobordism const& a, Cobordism const& b) {
    LabelMap c;
    try {
      c = boundary_constraints(a, b);
    } catch (Error const&) {
      return false;
    }
    for (auto const& [k, v] : c) {
      if (!a.body.has_label(k) || !b.body.has_label(v.name))
        return false;
    }
    try {
      return complex_isomorphic(a.body, b.body, c).has_value();
    } catch (Error const&) {
      return false;  // e.g. two labels forced onto one
    }
  }

  namespace {
    char const* const X00_BODY
        = "(x,a,d),(y,c,d),(z,c,b),(1,1,2),(2,a',d'),(4,c',d'),(3,c',b'),"
          "(4,d,a),(3,b,a),(2,b,c),(1,3,4),(x',d',a'),(y',b',a'),(z',b',c')";
    char const* const Y00_BODY
        = "(x,a,d),(y,c,d),(z,c,b),(1,2,3),(4,a',d'),(2,c',d'),(1,c',b'),"
          "(1,d,a),(3,b,a),(4,b,c),(2,4,3),(x',d',a'),(y',b',a'),(z',b',c')";

    Cobordism untwisted(Letter l) {
      Cobordism c;
      c.body = parse_presentation(l == Letter::X ? X00_BODY : Y00_BODY);
      auto const& names = collar::labels();
      for (std::size_t i = 0; i < 10; ++i) {
        c.left[i] = SignedLabel(names[i]);
        if (i >= 6)
          c.right[i] = SignedLabel(names[i] + "'");
        else if (i >= 3)
          c.right[i] = SignedLabel(names[i]);
      }
      if (l == Letter::X) {
        c.left[3]  = SignedLabel("4");
        c.left[4]  = SignedLabel("3");
        c.left[5]  = SignedLabel("2");
        c.right[0] = SignedLabel("2");
        c.right[1] = SignedLabel("4");
        c.right[2] = SignedLabel("3");
      } else {
        c.left[3]  = SignedLabel("1");
        c.left[4]  = SignedLabel("3");
        c.left[5]  = SignedLabel("4");
        c.right[0] = SignedLabel("4");
        c.right[1] = SignedLabel("2");
        c.right[2] = SignedLabel("1");
      }
      return c;
    }
  }  // namespace

  Cobordism generator_cobordism(Generator g) {
    Cobordism base = untwisted(g.letter);
    Cobordism c    = base;
    auto const& names = collar::labels();
    for (std::size_t i = 0; i < 10; ++i) {
      SignedLabel cl(names[i]);
      c.left[i]  = base.left_image(sigma(cl, g.left));
      c.right[i] = base.right_image(sigma(cl, g.right));
    }
    return c;
  }

  Triangle aligned(Triangle const& t, TriangleImage const& im) {
    return (im.inverted ? t.inverted() : t).rotated(im.rotation);
  }

  Occurrence image_occurrence(TriangleImage const& im, std::size_t position) {
    if (!im.inverted)
      return {im.index, (im.rotation + position) % 3};
    return {im.index, (6 + 2 - im.rotation - position) % 3};
  }

  namespace {

    std::optional<TriangleImage> find_alignment(Triangle const& img,
                                                Triangle const& target,
                                                std::size_t     index) {
      for (bool inv : {false, true}) {
        for (std::size_t r = 0; r < 3; ++r) {
          TriangleImage im{index, r, inv};
          if (aligned(target, im).identical(img))
            return im;
        }
      }
      return std::nullopt;
    }

    // union-find on label names, remembering orientation parity
    class SignedUnionFind {
     public:
      // returns (root, flip) with x = flip * root
      std::pair<std::string, bool> find(std::string const& x) {
        auto it = _parent.find(x);
        if (it == _parent.end())
          return {x, false};
        auto [r, f] = find(it->second.first);
        it->second  = {r, f != it->second.second};
        return it->second;
      }

      // keep = flip * drop; the class keeps keep's representative
      void merge(std::string const& keep, std::string const& drop, bool flip) {
        auto [rk, pk] = find(keep);
        auto [rd, pd] = find(drop);
        bool rel      = (pk != flip) != pd;
        if (rk == rd) {
          if (rel)
            throw MergeConflict("gluing identifies " + keep + " with -"
                                + keep);
          return;
        }
        _parent[rd] = {rk, rel};
      }

      SignedLabel image(SignedLabel const& l) {
        auto [r, f] = find(l.name);
        return SignedLabel(r, f != l.negative);
      }

     private:
      std::map<std::string, std::pair<std::string, bool>> _parent;
    };

    Triangle map_triangle(SignedUnionFind& uf, Triangle const& t) {
      return Triangle(uf.image(t[0]), uf.image(t[1]), uf.image(t[2]));
    }

    std::vector<std::size_t> locate(Presentation const&          body,
                                    std::vector<Triangle> const& tris) {
      std::vector<std::size_t> out;
      std::vector<char>        taken(body.size(), 0);
      for (auto const& t : tris) {
        std::size_t j = 0;
        while (j < body.size() && (taken[j] || !(body.triangle(j) == t)))
          ++j;
        if (j == body.size())
          throw Error("collar triangle " + t.str() + " missing from body");
        taken[j] = 1;
        out.push_back(j);
      }
      return out;
    }

    struct Glued {
      Presentation               tris;
      std::vector<TriangleImage> images;  // per input triangle
    };

    // Maps every input triangle, drops the ones in `removed` and points each
    // of them at its twin (given by index into the input list).
    Glued glue(SignedUnionFind&                uf,
               std::vector<Triangle> const&    input,
               std::vector<std::size_t> const& removed,
               std::vector<std::size_t> const& twins) {
      std::vector<char> gone(input.size(), 0);
      for (auto r : removed)
        gone[r] = 1;
      std::vector<Triangle>      out;
      std::vector<TriangleImage> images(input.size());
      for (std::size_t i = 0; i < input.size(); ++i) {
        if (gone[i])
          continue;
        images[i] = {out.size(), 0, false};
        out.push_back(map_triangle(uf, input[i]));
      }
      for (std::size_t k = 0; k < removed.size(); ++k) {
        auto img  = map_triangle(uf, input[removed[k]]);
        auto twin = images[twins[k]];
        auto al   = find_alignment(img, out[twin.index], twin.index);
        if (!al)
          throw MergeConflict("collar triangles " + img.str() + " and "
                              + out[twin.index].str() + " do not match");
        images[removed[k]] = *al;
      }
      return {Presentation(std::move(out)), std::move(images)};
    }

    LabelMap label_map(SignedUnionFind& uf, Presentation const& p) {
      LabelMap m;
      for (auto const& l : p.labels())
        m.emplace(l, uf.image(SignedLabel(l)));
      return m;
    }

    BoundaryMap map_boundary(SignedUnionFind& uf, BoundaryMap const& b) {
      BoundaryMap out;
      for (std::size_t i = 0; i < 10; ++i)
        out[i] = uf.image(b[i]);
      return out;
    }

    // C-triangle k of `a`'s right collar is glued onto C-triangle perm[k] of
    // `b`'s left collar.
    std::vector<std::size_t> collar_permutation(bool twist) {
      auto const&              c = collar::presentation().triangles();
      std::vector<std::size_t> perm;
      for (auto const& t : c) {
        Triangle s(sigma(t[0], twist), sigma(t[1], twist), sigma(t[2], twist));
        std::size_t j = 0;
        while (!(c[j] == s))
          ++j;
        perm.push_back(j);
      }
      return perm;
    }

  }  // namespace

  Composition compose_traced(Cobordism const& a, Cobordism const& b, bool twist) {
    for (auto const& l : a.body.labels()) {
      if (b.body.has_label(l))
        throw Error("compose: bodies share label " + l
                    + " (relabel the right operand first)");
    }
    SignedUnionFind uf;
    auto const&     names = collar::labels();
    for (std::size_t i = 0; i < 10; ++i) {
      SignedLabel ra   = a.right[i];
      SignedLabel lb   = b.left_image(sigma(SignedLabel(names[i]), twist));
      bool        flip = ra.negative != lb.negative;
      if (i < 3)
        uf.merge(ra.name, lb.name, flip);  // a's interior absorbs b's strand
      else
        uf.merge(lb.name, ra.name, flip);
    }
    auto ra_idx = locate(a.body, a.right_collar());
    auto lb_idx = locate(b.body, b.left_collar());
    auto perm   = collar_permutation(twist);

    std::vector<Triangle> input = a.body.triangles();
    input.insert(input.end(), b.body.triangles().begin(),
                 b.body.triangles().end());
    std::vector<std::size_t> twins;
    for (std::size_t k = 0; k < 6; ++k)
      twins.push_back(a.body.size() + lb_idx[perm[k]]);
    auto g = glue(uf, input, ra_idx, twins);

    Composition out;
    out.result.body  = std::move(g.tris);
    out.result.left  = map_boundary(uf, a.left);
    out.result.right = map_boundary(uf, b.right);
    out.from_a       = label_map(uf, a.body);
    out.from_b       = label_map(uf, b.body);
    out.tri_a.assign(g.images.begin(), g.images.begin() + a.body.size());
    out.tri_b.assign(g.images.begin() + a.body.size(), g.images.end());
    return out;
  }

  Cobordism compose(Cobordism const& a, Cobordism const& b, bool twist) {
    return compose_traced(a, b, twist).result;
  }

  Closure close_up_traced(Cobordism const& c) {
    SignedUnionFind uf;
    for (std::size_t i = 0; i < 10; ++i) {
      SignedLabel r    = c.right[i];
      SignedLabel l    = c.left[i];
      bool        flip = r.negative != l.negative;
      if (i < 3)
        uf.merge(r.name, l.name, flip);
      else
        uf.merge(l.name, r.name, flip);
    }
    auto r_idx = locate(c.body, c.right_collar());
    auto l_idx = locate(c.body, c.left_collar());
    auto g     = glue(uf, c.body.triangles(), r_idx, l_idx);
    Closure out;
    out.complex   = std::move(g.tris);
    out.labels    = label_map(uf, c.body);
    out.triangles = std::move(g.images);
    return out;
  }

  Presentation close_up(Cobordism const& c) {
    return close_up_traced(c).complex;
  }

  Presentation close_up(Word const& w) {
    return close_up(word_cobordism(w));
  }

  namespace {

    std::string fresh_name(std::string const& raw, std::size_t k, std::size_t n) {
      if (raw.size() == 1 && raw[0] >= '1' && raw[0] <= '4')
        return std::to_string(10 * k + (raw[0] - '0'));
      static std::string const hz = "adcb";
      if (raw.size() == 1 && hz.find(raw[0]) != std::string::npos)
        return std::to_string(10 * k + 5 + hz.find(raw[0]));
      if (raw.size() == 2 && raw[1] == '\'' && hz.find(raw[0]) != std::string::npos) {
        if (k + 1 == n)
          return std::to_string(10 * (k + 1) + 5 + hz.find(raw[0]));
        return raw + "#" + std::to_string(k);
      }
      bool primed = raw.size() == 2;
      if ((!primed && k == 0) || (primed && k + 1 == n))
        return raw;
      return raw + "#" + std::to_string(k);
    }

    SignedLabel rename(LabelMap const& m, SignedLabel const& l) {
      return relabel(m, l);
    }

  }  // namespace

  WordBody word_body(Word const& w) {
    if (w.empty())
      throw Error("empty word");
    WordBody    out;
    out.word        = w;
    std::size_t n   = w.size();
    std::vector<Cobordism> gens;
    for (auto const& g : w)
      gens.push_back(generator_cobordism(g));
    for (std::size_t k = 0; k < n; ++k) {
      Cobordism const& g = gens[k];
      LabelMap  raw;
      for (auto const& l : g.body.labels())
        raw.emplace(l, SignedLabel(fresh_name(l, k, n)));
      Cobordism fresh;
      std::vector<Triangle> tris;
      for (auto const& t : g.body.triangles())
        tris.push_back(relabel(raw, t));
      fresh.body = Presentation(std::move(tris));
      for (std::size_t i = 0; i < 10; ++i) {
        fresh.left[i]  = rename(raw, g.left[i]);
        fresh.right[i] = rename(raw, g.right[i]);
      }
      std::vector<TriangleImage> ident;
      for (std::size_t t = 0; t < g.body.size(); ++t)
        ident.push_back({t, 0, false});
      if (k == 0) {
        out.cob = std::move(fresh);
        out.letter_labels.push_back(raw);
        out.letter_triangles.push_back(ident);
        continue;
      }
      auto comp = compose_traced(out.cob, fresh, false);
      for (std::size_t j = 0; j < k; ++j) {
        for (auto& [name, img] : out.letter_labels[j])
          img = relabel(comp.from_a, img);
        for (std::size_t t = 0; t < out.letter_triangles[j].size(); ++t) {
          auto& im = out.letter_triangles[j][t];
          // recompute the alignment against the new position
          auto  raw_tri = relabel(out.letter_labels[j],
                               gens[j].body.triangle(t));
          auto  idx     = comp.tri_a[im.index].index;
          auto  al      = find_alignment(raw_tri, comp.result.body.triangle(idx), idx);
          if (!al)
            throw Error("word_body: lost track of a triangle");
          im = *al;
        }
      }
      LabelMap lk;
      for (auto const& [name, img] : raw)
        lk.emplace(name, relabel(comp.from_b, img));
      out.letter_labels.push_back(lk);
      std::vector<TriangleImage> tk;
      for (std::size_t t = 0; t < g.body.size(); ++t)
        tk.push_back(comp.tri_b[t]);
      out.letter_triangles.push_back(tk);
      out.cob = std::move(comp.result);
    }
    return out;
  }

  Cobordism word_cobordism(Word const& w) {
    return word_body(w).cob;
  }

}  // namespace rank74
