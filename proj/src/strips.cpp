#include "rank74/strips.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "rank74/error.hpp"

namespace rank74 {

  namespace {
    std::size_t orig_pos(std::size_t x, bool inv) {
      return inv ? 2 - x : x;
    }
    // oriented vertex v starts oriented side v
    std::size_t orig_vertex(std::size_t v, bool inv) {
      return inv ? (3 - v) % 3 : v;
    }
    CornerSet sorted(CornerSet c) {
      std::sort(c.begin(), c.end());
      return c;
    }
  }  // namespace

  Side oriented_side(Presentation const& p, std::size_t t, bool inv, std::size_t x) {
    x %= 3;
    return inv ? -p.side(t, 2 - x) : p.side(t, x);
  }

  StripReading reading(Presentation const& p, Strip const& s, std::size_t r) {
    StripReading                  out;
    std::vector<std::array<Corner, 3>> up, down;
    for (auto const& st : s.path) {
      auto cid = [&](std::size_t v) {
        return Corner{st.triangle, orig_vertex(v % 3, st.inverted)};
      };
      std::size_t e = st.entry;
      if (st.off == 2) {
        out.bottom.push_back(oriented_side(p, st.triangle, st.inverted, e + 1));
        up.push_back({cid(e), cid(e + 1), cid(e + 2)});  // pivot, BL, BR
      } else {
        out.top.push_back(-oriented_side(p, st.triangle, st.inverted, e + 2));
        down.push_back({cid(e + 1), cid(e + 2), cid(e)});  // pivot, TR, TL
      }
    }
    std::size_t n = out.bottom.size();
    for (std::size_t k = 0; k < n; ++k) {
      auto k1 = (k + 1) % n;
      out.bottom_joints.push_back(sorted({up[k][2], down[k][0], up[k1][1]}));
      out.top_joints.push_back(sorted({down[k][1], up[k1][0], down[k1][2]}));
    }
    if (r & 1) {
      StripReading f;
      for (std::size_t k = 0; k < n; ++k) {
        f.bottom.push_back(-out.top[n - 1 - k]);
        f.top.push_back(-out.bottom[n - 1 - k]);
        std::size_t j = (2 * n - 2 - k) % n;
        f.bottom_joints.push_back(out.top_joints[j]);
        f.top_joints.push_back(out.bottom_joints[j]);
      }
      out = std::move(f);
    }
    if (r & 2) {
      std::swap(out.bottom, out.top);
      std::swap(out.bottom_joints, out.top_joints);
    }
    return out;
  }

  bool valid_strip(Presentation const& p, Strip const& s) {
    auto const& path = s.path;
    if (path.empty() || path.size() % 2)
      return false;
    for (std::size_t k = 0; k < path.size(); ++k) {
      auto const& a = path[k];
      auto const& b = path[(k + 1) % path.size()];
      if (a.triangle >= p.size() || b.triangle >= p.size() || a.entry > 2 || b.entry > 2)
        return false;
      if (a.off != (k % 2 ? 1 : 2) || b.off != 3 - a.off)
        return false;
      std::size_t x = (a.entry + a.off) % 3;
      if (oriented_side(p, a.triangle, a.inverted, x)
          != -oriented_side(p, b.triangle, b.inverted, b.entry))
        return false;
      // glued to a different copy of the label
      if (a.triangle == b.triangle
          && orig_pos(x, a.inverted) == orig_pos(b.entry, b.inverted))
        return false;
    }
    return true;
  }

  namespace {
    using Key = std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>;

    Key canonical_key(std::vector<GalleryStep> const& path) {
      Key seq;
      for (auto const& st : path)
        seq.emplace_back(st.triangle,
                         orig_pos(st.entry, st.inverted),
                         orig_pos((st.entry + st.off) % 3, st.inverted));
      Key rev;
      for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        rev.emplace_back(std::get<0>(*it), std::get<2>(*it), std::get<1>(*it));
      Key         best;
      std::size_t n = seq.size();
      for (auto const* s : {&seq, &rev}) {
        for (std::size_t r = 0; r < n; ++r) {
          Key c(s->begin() + r, s->end());
          c.insert(c.end(), s->begin(), s->begin() + r);
          if (best.empty() || c < best)
            best = std::move(c);
        }
      }
      return best;
    }
  }  // namespace

  StripList strips(Presentation const& p, std::size_t max_period, std::size_t budget) {
    StripList out;
    if (max_period == 0)
      return out;
    std::set<Key>            found;
    std::vector<GalleryStep> path;
    std::size_t              steps = 0;

    auto rec = [&](auto& self) -> void {
      if (++steps > budget) {
        out.complete = false;
        return;
      }
      auto const& cur = path.back();
      std::size_t x   = (cur.entry + cur.off) % 3;
      Side        lab = oriented_side(p, cur.triangle, cur.inverted, x);
      Occurrence  me{cur.triangle, orig_pos(x, cur.inverted)};
      for (auto const& o : p.occurrences(lab.label)) {
        if (o == me)
          continue;
        for (bool f2 : {false, true}) {
          std::size_t p2 = orig_pos(o.position, f2);
          if (oriented_side(p, o.triangle, f2, p2) != -lab)
            continue;
          GalleryStep nx{o.triangle, f2, std::uint8_t(p2), std::uint8_t(3 - cur.off)};
          if (nx == path.front()) {
            if (found.insert(canonical_key(path)).second)
              out.strips.push_back({path});
            continue;
          }
          if (path.size() >= 2 * max_period
              || std::find(path.begin(), path.end(), nx) != path.end())
            continue;
          path.push_back(nx);
          self(self);
          path.pop_back();
          if (!out.complete)
            return;
        }
      }
    };
    for (std::size_t t = 0; t < p.size() && out.complete; ++t)
      for (bool inv : {false, true})
        for (std::uint8_t e = 0; e < 3 && out.complete; ++e) {
          path = {{t, inv, e, 2}};
          rec(rec);
        }
    std::stable_sort(out.strips.begin(), out.strips.end(),
                     [](Strip const& a, Strip const& b) { return a.period() < b.period(); });
    return out;
  }

  std::vector<Side> primitive_root(std::vector<Side> const& w) {
    std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d)
        continue;
      bool rep = true;
      for (std::size_t i = d; i < n && rep; ++i)
        rep = w[i] == w[i - d];
      if (rep)
        return {w.begin(), w.begin() + d};
    }
    return w;
  }

  std::vector<Side> canonical_circle(std::vector<Side> const& w) {
    std::vector<Side> inv;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      inv.push_back(-*it);
    std::vector<Side> best;
    std::size_t       n = w.size();
    for (auto const* s : std::array<std::vector<Side> const*, 2>{&w, &inv}) {
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<Side> c(s->begin() + r, s->end());
        c.insert(c.end(), s->begin(), s->begin() + r);
        if (best.empty() || c < best)
          best = std::move(c);
      }
    }
    return best;
  }

  std::vector<SignedLabel> to_labels(Presentation const& p, std::vector<Side> const& w) {
    std::vector<SignedLabel> out;
    for (auto s : w)
      out.push_back(p.to_label(s));
    return out;
  }

  std::vector<Side> to_sides(Presentation const& p, std::vector<SignedLabel> const& w) {
    std::vector<Side> out;
    for (auto const& l : w)
      out.push_back(p.to_side(l));
    return out;
  }

  std::size_t AnnulusGraph::find_node(std::vector<Side> const& w) const {
    auto c = canonical_circle(primitive_root(w));
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].circle == c)
        return i;
    return SIZE_MAX;
  }

  nlohmann::json AnnulusGraph::to_json(Presentation const& p) const {
    auto word = [&](std::vector<Side> const& w) {
      std::string s;
      for (auto const& l : to_labels(p, w))
        s += (s.empty() ? "" : ".") + l.str();
      return s;
    };
    auto ns = nlohmann::json::array();
    for (auto const& n : nodes)
      ns.push_back({{"circle", word(n.circle)}, {"geodesic", n.geodesic}});
    auto as = nlohmann::json::array();
    for (auto const& a : arcs) {
      auto gallery = nlohmann::json::array();
      for (auto const& st : strips[a.strip].path)
        gallery.push_back({st.triangle, st.inverted, st.entry, st.off});
      as.push_back({{"bottom", a.bottom},
                    {"top", a.top},
                    {"bottom_winding", a.bottom_winding},
                    {"top_winding", a.top_winding},
                    {"period", strips[a.strip].period()},
                    {"gallery", gallery}});
    }
    return {{"nodes", ns}, {"arcs", as}, {"complete", complete}};
  }

  AnnulusGraph annulus_graph(Presentation const& p, std::size_t L, std::size_t budget) {
    AnnulusGraph g;
    if (L == 0)
      return g;
    auto sl    = strips(p, L, budget);
    g.complete = sl.complete;
    LinkOracle                                  oracle(p);
    std::map<std::vector<Side>, std::size_t>    index;
    auto node = [&](std::vector<Side> const& w) {
      auto root = primitive_root(w);
      auto c    = canonical_circle(root);
      auto [it, fresh] = index.emplace(c, g.nodes.size());
      if (fresh)
        g.nodes.push_back({c, local_geodesic_check(oracle, p, to_labels(p, c))});
      return std::make_pair(it->second, w.size() / root.size());
    };
    for (auto& s : sl.strips) {
      auto r        = reading(p, s, 0);
      auto [b, bw]  = node(r.bottom);
      auto [t, tw]  = node(r.top);
      g.arcs.push_back({g.strips.size(), b, t, bw, tw});
      g.strips.push_back(std::move(s));
    }
    return g;
  }

}  // namespace rank74
