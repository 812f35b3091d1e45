#include "rank74/isomorphism.hpp"

#include <algorithm>
#include <deque>

#include "rank74/error.hpp"

namespace rank74 {

  SignedLabel relabel(LabelMap const& m, SignedLabel const& l) {
    auto it = m.find(l.name);
    if (it == m.end())
      throw Error("label " + l.name + " not in map");
    return it->second.times(l.negative);
  }

  Triangle relabel(LabelMap const& m, Triangle const& t) {
    return Triangle(relabel(m, t[0]), relabel(m, t[1]), relabel(m, t[2]));
  }

  namespace {

    constexpr std::uint32_t NONE = UINT32_MAX;

    struct Search {
      Presentation const&      a;
      Presentation const&      b;
      std::vector<Side>        fwd;   // a-label -> b side, label NONE if unset
      std::vector<std::uint32_t> back;  // b-label -> a-label
      std::vector<char>        used;  // b triangles
      std::vector<std::size_t> order;

      Search(Presentation const& pa, Presentation const& pb)
          : a(pa),
            b(pb),
            fwd(pa.num_labels(), Side{NONE, false}),
            back(pb.num_labels(), NONE),
            used(pb.size(), 0) {}

      bool bind(std::uint32_t la, Side sb, std::vector<std::uint32_t>& log) {
        if (fwd[la].label != NONE)
          return fwd[la] == sb;
        if (back[sb.label] != NONE)
          return false;
        fwd[la]          = sb;
        back[sb.label]   = la;
        log.push_back(la);
        return true;
      }

      void undo(std::vector<std::uint32_t> const& log) {
        for (auto la : log) {
          back[fwd[la].label] = NONE;
          fwd[la]             = Side{NONE, false};
        }
      }

      // try to send triangle ta onto tb with the given alignment
      bool try_align(std::size_t ta, std::size_t tb, std::size_t rot, bool inv,
                     std::vector<std::uint32_t>& log) {
        for (std::size_t i = 0; i < 3; ++i) {
          Side sa = a.side(ta, i);
          // aligned side i of tb: rotate, optionally invert
          Side sb = inv ? -b.side(tb, 2 * 3 + rot - i) : b.side(tb, rot + i);
          Side img{sb.label, sb.negative != sa.negative};
          if (!bind(sa.label, img, log))
            return false;
        }
        return true;
      }

      bool run(std::size_t k) {
        if (k == order.size())
          return true;
        auto ta = order[k];
        // candidates: occurrences of an already mapped label, else all
        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < 3 && cand.empty(); ++i) {
          auto m = fwd[a.side(ta, i).label];
          if (m.label != NONE) {
            for (auto o : b.occurrences(m.label))
              cand.push_back(o.triangle);
          }
        }
        if (cand.empty()) {
          for (std::size_t t = 0; t < b.size(); ++t)
            cand.push_back(t);
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (auto tb : cand) {
          if (used[tb])
            continue;
          for (std::size_t rot = 0; rot < 3; ++rot) {
            for (bool inv : {false, true}) {
              std::vector<std::uint32_t> log;
              if (try_align(ta, tb, rot, inv, log)) {
                used[tb] = 1;
                if (run(k + 1))
                  return true;
                used[tb] = 0;
              }
              undo(log);
            }
          }
        }
        return false;
      }
    };

    std::vector<std::size_t> signature(Presentation const& p) {
      std::vector<std::size_t> s;
      for (auto const& l : p.labels())
        s.push_back(p.arity(l));
      std::sort(s.begin(), s.end());
      std::size_t rep = 0;
      for (auto const& t : p.triangles())
        rep += t.has_repeated_label();
      s.push_back(rep);
      s.push_back(p.size());
      return s;
    }

  }  // namespace

  std::optional<LabelMap> complex_isomorphic(Presentation const& p1,
                                             Presentation const& p2,
                                             LabelMap const&     constraints) {
    Search s(p1, p2);
    std::vector<std::uint32_t> log;
    for (auto const& [name, img] : constraints) {
      auto la = p1.find_label(name);
      auto lb = p2.find_label(img.name);
      if (!la || !lb)
        throw Error("inconsistent constraints: " + name + " -> " + img.str()
                    + " names a missing label");
      if (!s.bind(*la, Side{*lb, img.negative}, log))
        throw Error("inconsistent constraints at " + name);
    }
    if (signature(p1) != signature(p2) || p1.num_labels() != p2.num_labels())
      return std::nullopt;
    // triangle order: grow from constrained labels through shared labels
    std::vector<char>       seen(p1.size(), 0);
    std::deque<std::size_t> q;
    auto push_label = [&](std::uint32_t l) {
      for (auto o : p1.occurrences(l)) {
        if (!seen[o.triangle]) {
          seen[o.triangle] = 1;
          q.push_back(o.triangle);
        }
      }
    };
    for (std::uint32_t l = 0; l < p1.num_labels(); ++l) {
      if (s.fwd[l].label != NONE)
        push_label(l);
    }
    for (std::size_t r = 0; r < p1.size() || !q.empty();) {
      if (q.empty()) {
        while (r < p1.size() && seen[r])
          ++r;
        if (r == p1.size())
          break;
        seen[r] = 1;
        q.push_back(r);
      }
      auto t = q.front();
      q.pop_front();
      s.order.push_back(t);
      for (std::size_t i = 0; i < 3; ++i)
        push_label(p1.side(t, i).label);
    }
    if (!s.run(0))
      return std::nullopt;
    LabelMap out;
    for (std::uint32_t l = 0; l < p1.num_labels(); ++l) {
      out.emplace(p1.label_name(l), p2.to_label(s.fwd[l]));
    }
    return out;
  }

}  // namespace rank74
