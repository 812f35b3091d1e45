#include "rank74/census.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <unsupported/Eigen/Polynomials>

#include "rank74/certificates.hpp"
#include "rank74/error.hpp"

namespace rank74 {

  CensusPattern parse_census_pattern(std::string const& s) {
    if (s == "Y00Y00" || s == "Y00.Y00")
      return CensusPattern::Y00Y00;
    if (s == "Y0*Y0*" || s == "Y0sY0s" || s == "Y0*.Y0*")
      return CensusPattern::Y0sY0s;
    if (s == "omega0" || s == "Y00Y00Y00" || s == "Y00.Y00.Y00")
      return CensusPattern::omega0;
    throw Error("unknown pattern '" + s + "'");
  }

  std::string to_string(CensusPattern p) {
    switch (p) {
      case CensusPattern::Y00Y00: return "Y00Y00";
      case CensusPattern::Y0sY0s: return "Y0*Y0*";
      case CensusPattern::omega0: return "omega0";
    }
    return "?";
  }

  Semantics parse_semantics(std::string const& s) {
    if (s == "representative")
      return Semantics::representative;
    if (s == "class")
      return Semantics::class_;
    throw Error("unknown semantics '" + s + "'");
  }

  std::string to_string(Semantics s) {
    return s == Semantics::class_ ? "class" : "representative";
  }

  std::size_t pattern_length(CensusPattern p) {
    return p == CensusPattern::omega0 ? 3 : 2;
  }

  namespace {
    std::string str(BigInt const& x) {
      return x.str();
    }

    CensusRow make_row(std::size_t n, BigInt total, BigInt avoiding, BigInt terminal,
                       BigInt const* prev_avoiding) {
      CensusRow r;
      r.n           = n;
      r.total       = total;
      r.avoiding    = avoiding;
      r.terminal    = terminal;
      r.probability = Rational(1) - Rational(avoiding, total);
      if (prev_avoiding && *prev_avoiding != 0)
        r.ratio = static_cast<double>(Rational(avoiding, *prev_avoiding));
      return r;
    }
  }  // namespace

  std::string CensusTable::to_csv() const {
    std::ostringstream out;
    out << "n,E_n,E'_n,E''_n,prob_num,prob_den,prob_float\n";
    for (auto const& r : rows) {
      out << r.n << ',' << r.total << ',' << r.avoiding << ',' << r.terminal << ','
          << numerator(r.probability) << ',' << denominator(r.probability) << ','
          << static_cast<double>(r.probability) << '\n';
    }
    return out.str();
  }

  nlohmann::json CensusTable::to_json() const {
    auto rs = nlohmann::json::array();
    for (auto const& r : rows)
      rs.push_back({{"n", r.n},
                    {"E", str(r.total)},
                    {"E_prime", str(r.avoiding)},
                    {"E_second", str(r.terminal)},
                    {"prob_num", str(numerator(r.probability))},
                    {"prob_den", str(denominator(r.probability))},
                    {"prob_float", static_cast<double>(r.probability)},
                    {"ratio", r.ratio}});
    return {{"source", source},
            {"pattern", to_string(pattern)},
            {"derivation", derivation},
            {"rows", rs}};
  }

  // ---------------------------------------------------------------- recurrence

  CensusTable recurrence_table(std::size_t n_max, CensusPattern p) {
    if (n_max < 3)
      throw Error("recurrence_table needs n_max >= 3");
    std::size_t m = pattern_length(p);
    CensusTable t;
    t.source  = "recurrence";
    t.pattern = p;
    {
      std::ostringstream d;
      d << "a_n = |E'_n| (avoiding), b_n = |E''_n| (pattern first completed by the last "
        << m << " letters).\n"
        << "Each avoiding word of length n has 3 one-letter continuations; each is either "
           "avoiding or completes the pattern at its end:\n"
        << "  a_{n+1} + b_{n+1} = 3 a_n.\n"
        << "Appending the " << m << "-letter block to an avoiding word of length n makes the "
           "pattern appear; since Y00 overlaps itself at every shift, the first occurrence ends "
           "at n+i for exactly one i in 1.." << m << ":\n"
        << "  b_{n+" << m << "}";
      for (std::size_t i = m - 1; i >= 1; --i)
        d << " + b_{n+" << i << "}";
      d << " = a_n.\n"
        << "Seeds: a_0 = 1 (empty word), a_1 = 6, b_1";
      for (std::size_t i = 2; i < m; ++i)
        d << " = b_" << i;
      d << " = 0.\n"
        << "Characteristic equation of b: x^" << m << " = 2(";
      for (std::size_t i = m - 1; i >= 1; --i)
        d << "x^" << i << " + ";
      d << "1).";
      t.derivation = d.str();
    }
    std::vector<BigInt> a(n_max + 1), b(n_max + 1);
    a[0] = 1;
    a[1] = 6;
    for (std::size_t k = 2; k <= n_max; ++k) {
      if (k >= m) {
        b[k] = a[k - m];
        for (std::size_t i = 1; i < m; ++i)
          b[k] -= b[k - m + i];
      }
      a[k] = 3 * a[k - 1] - b[k];
    }
    BigInt total = 2;
    for (std::size_t n = 1; n <= n_max; ++n) {
      total *= 3;
      t.rows.push_back(make_row(n, total, a[n], b[n], n > 1 ? &a[n - 1] : nullptr));
    }
    return t;
  }

  nlohmann::json GrowthConstants::to_json() const {
    auto rs = nlohmann::json::array();
    for (auto const& r : roots)
      rs.push_back({{"re", r.real()}, {"im", r.imag()}});
    return {{"g", g}, {"g_prime", g_prime}, {"roots", rs}, {"exact_roots", exact_roots}};
  }

  GrowthConstants growth_constants(CensusPattern p) {
    std::size_t     m = pattern_length(p);
    GrowthConstants gc;
    Eigen::VectorXd coeff(m + 1);
    for (std::size_t i = 0; i < m; ++i)
      coeff[i] = -2;
    coeff[m] = 1;
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeff);
    for (Eigen::Index i = 0; i < solver.roots().size(); ++i)
      gc.roots.push_back(solver.roots()[i]);
    std::sort(gc.roots.begin(), gc.roots.end(), [](auto const& x, auto const& y) {
      return x.real() > y.real();
    });
    gc.g_prime = gc.roots.front().real();
    if (m == 2) {
      QSqrt3 plus{1, 1}, minus{1, -1}, two{2, 0};
      gc.exact_roots = plus * plus == two * plus + two && minus * minus == two * minus + two;
    }
    return gc;
  }

  // ---------------------------------------------------------------- enumeration

  namespace {
    bool canonical_contains(CanonicalWord const& c, CensusPattern p) {
      // the canonical representative: i_1 = t_0, i_k = 0, j_k = t_k
      std::size_t n = c.size(), m = pattern_length(p);
      for (std::size_t k = 0; k + m <= n; ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
          std::size_t q = k + i;
          ok = c.letters[q] == Letter::Y && (q > 0 || !c.chain[0]);
          if (p != CensusPattern::Y0sY0s)
            ok = ok && !c.chain[q + 1];
        }
        if (ok)
          return true;
      }
      return false;
    }

    bool class_contains(CanonicalWord const& c, CensusPattern p) {
      std::size_t n = c.size(), m = pattern_length(p);
      auto        Y = [&](std::size_t q) { return q < n && c.letters[q] == Letter::Y; };
      // window of the Y-run covering each interface, or none
      std::vector<std::size_t> window(n + 1, SIZE_MAX);
      std::vector<std::pair<std::size_t, std::size_t>> runs;
      for (std::size_t q = 0; q < n;) {
        if (!Y(q)) {
          ++q;
          continue;
        }
        std::size_t e = q;
        while (Y(e))
          ++e;
        runs.push_back({q, e});  // interfaces q..e
        for (std::size_t i = q; i <= e; ++i)
          window[i] = runs.size() - 1;
        q = e;
      }
      for (std::size_t k = 0; k + m <= n; ++k) {
        bool letters = true;
        for (std::size_t i = 0; i < m; ++i)
          letters = letters && Y(k + i);
        if (!letters)
          continue;
        if (p == CensusPattern::Y0sY0s)
          return true;
        // interfaces that must read 0
        std::vector<bool> zero(n + 1);
        for (std::size_t i = 1; i < m; ++i)
          zero[k + i] = true;
        if (k + m == n || Y(k + m))
          zero[k + m] = true;
        if (Y(0))
          zero[0] = true;
        bool ok = true;
        for (std::size_t q = 0; q <= n && ok; ++q)
          if (zero[q] && window[q] == SIZE_MAX && c.chain[q])
            ok = false;
        for (auto [s, e] : runs) {
          bool all = true, parity = false;
          for (std::size_t q = s; q <= e; ++q) {
            all    = all && zero[q];
            parity = parity != bool(c.chain[q]);
          }
          if (all && parity)
            ok = false;
        }
        if (ok)
          return true;
      }
      return false;
    }

    CanonicalWord truncate(CanonicalWord const& c) {
      CanonicalWord t;
      t.letters.assign(c.letters.begin(), c.letters.end() - 1);
      t.chain.assign(c.chain.begin(), c.chain.end() - 1);
      return t;
    }

    // every canonical word of length n, streamed
    template <typename F>
    void for_each_canonical(std::size_t n, F&& f) {
      if (n == 0)
        return;
      CanonicalWord c;
      c.letters.resize(n);
      c.chain.resize(n + 1);
      auto rec = [&](auto& self, std::size_t k) -> void {
        if (k == n) {
          f(c);
          return;
        }
        for (Letter l : {Letter::X, Letter::Y}) {
          if (l == Letter::Y && c.chain[k])
            continue;
          c.letters[k] = l;
          for (bool b : {false, true}) {
            c.chain[k + 1] = b;
            self(self, k + 1);
          }
        }
      };
      for (bool first : {false, true}) {
        c.chain[0] = first;
        rec(rec, 0);
      }
    }
  }  // namespace

  bool contains_pattern(CanonicalWord const& c, CensusPattern p, Semantics s) {
    if (c.size() == 0)
      return false;
    return s == Semantics::class_ ? class_contains(c, p) : canonical_contains(c, p);
  }

  nlohmann::json Counts::to_json() const {
    return {{"n", n},
            {"total", str(total)},
            {"avoiding", str(avoiding)},
            {"containing", str(containing)},
            {"terminal", str(terminal)}};
  }

  Counts enumerate_counts(std::size_t n, CensusPattern p, Semantics s, std::size_t bound) {
    if (n == 0)
      throw Error("n must be >= 1");
    if (n > bound)
      throw BoundExceeded("enumeration bound " + std::to_string(bound) + " exceeded (n = "
                          + std::to_string(n) + ")");
    Counts        out;
    out.n = n;
    std::uint64_t total = 0, avoid = 0, contain = 0, term = 0;
    for_each_canonical(n, [&](CanonicalWord const& c) {
      ++total;
      if (contains_pattern(c, p, s)) {
        ++contain;
        if (!contains_pattern(truncate(c), p, s))
          ++term;
      } else {
        ++avoid;
      }
    });
    out.total      = total;
    out.avoiding   = avoid;
    out.containing = contain;
    out.terminal   = term;
    return out;
  }

  CensusTable enumeration_table(std::size_t n_max, CensusPattern p, Semantics s, std::size_t bound) {
    CensusTable t;
    t.source     = "enumeration/" + to_string(s);
    t.pattern    = p;
    t.derivation = "exhaustive count over canonical words; E''_n counts words that contain the "
                   "pattern while their canonical prefix of length n-1 does not";
    BigInt prev;
    for (std::size_t n = 1; n <= n_max; ++n) {
      auto c = enumerate_counts(n, p, s, bound);
      t.rows.push_back(make_row(n, c.total, c.avoiding, c.terminal, n > 1 ? &prev : nullptr));
      prev = c.avoiding;
    }
    return t;
  }

  // ---------------------------------------------------------------- sampling

  std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    // splitmix64 of the counter
    std::uint64_t z = seed + (trial + 1) * 0x9E3779B97F4A7C15ULL;
    z               = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z               = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  CanonicalWord uniform_sample(std::size_t n, std::uint64_t seed) {
    if (n == 0)
      throw Error("n must be >= 1");
    // f[k][b]: completions from letter k with pending bit t_k = b
    std::vector<std::array<BigInt, 2>> f(n + 1);
    f[n] = {1, 1};
    for (std::size_t k = n; k-- > 0;) {
      BigInt next = f[k + 1][0] + f[k + 1][1];
      f[k]        = {2 * next, next};
    }
    std::mt19937_64 rng(seed);
    auto pick = [&](BigInt const& w0, BigInt const& w1) {
      boost::random::uniform_int_distribution<BigInt> d(0, w0 + w1 - 1);
      return d(rng) >= w0;  // true: option 1
    };
    CanonicalWord c;
    c.chain.push_back(pick(f[0][0], f[0][1]));
    for (std::size_t k = 0; k < n; ++k) {
      bool y = !c.chain[k] && pick(1, 1);
      c.letters.push_back(y ? Letter::Y : Letter::X);
      c.chain.push_back(pick(f[k + 1][0], f[k + 1][1]));
    }
    return c;
  }

  std::pair<double, double> wilson_interval(std::size_t hits, std::size_t trials, double level) {
    if (trials == 0)
      throw Error("no trials");
    boost::math::normal nd;
    double              z  = boost::math::quantile(nd, 1 - (1 - level) / 2);
    double              nn = double(trials), ph = double(hits) / nn;
    double              den = 1 + z * z / nn;
    double              mid = (ph + z * z / (2 * nn)) / den;
    double              hw  = z * std::sqrt(ph * (1 - ph) / nn + z * z / (4 * nn * nn)) / den;
    return {std::max(0.0, mid - hw), std::min(1.0, mid + hw)};
  }

  nlohmann::json Estimate::to_json() const {
    return {{"property", property},
            {"n", n},
            {"trials", trials},
            {"hits", hits},
            {"seed", seed},
            {"generator", "mt19937_64, per-trial seed splitmix64(seed + (i+1)*0x9E3779B97F4A7C15)"},
            {"estimate", point},
            {"ci", {lower, upper}},
            {"level", level}};
  }

  bool sample_property(std::string const& property, CanonicalWord const& w, CensusPattern p) {
    if (property == "exprank-pattern-a")
      return contains_pattern(w, CensusPattern::Y00Y00, Semantics::class_);
    if (property == "pattern")
      return contains_pattern(w, p, Semantics::class_);
    auto rep = w.representative();
    if (property == "exprank")
      return exp_rank_certificate(rep).exists();
    if (property == "z2")
      return z2_certificate(rep).conclusive();
    if (property == "meso")
      return mesoscopic_certificate(rep).has_value();
    throw Error("unknown property '" + property + "'");
  }

  Estimate monte_carlo(std::size_t n, std::size_t trials, std::string const& property,
                       std::uint64_t seed, CensusPattern p) {
    if (trials == 0)
      throw Error("trials must be >= 1");
    Estimate e;
    e.property = property;
    e.n        = n;
    e.trials   = trials;
    e.seed     = seed;
    for (std::size_t i = 0; i < trials; ++i)
      e.hits += sample_property(property, uniform_sample(n, trial_seed(seed, i)), p);
    e.point                = double(e.hits) / double(trials);
    std::tie(e.lower, e.upper) = wilson_interval(e.hits, trials, e.level);
    return e;
  }

  double chi_square_uniform(std::vector<std::size_t> const& counts) {
    if (counts.size() < 2)
      throw Error("need at least two bins");
    double total = 0;
    for (auto c : counts)
      total += double(c);
    double expect = total / double(counts.size()), stat = 0;
    for (auto c : counts)
      stat += (double(c) - expect) * (double(c) - expect) / expect;
    boost::math::chi_squared dist(double(counts.size() - 1));
    return boost::math::cdf(boost::math::complement(dist, stat));
  }

  nlohmann::json Fit::to_json() const {
    return {{"slope", slope}, {"intercept", intercept}, {"target", target}, {"rows", rows}};
  }

  Fit convergence_fit(CensusTable const& t, std::size_t first, std::size_t last) {
    std::vector<double> xs, ys;
    for (auto const& r : t.rows) {
      if (r.n < first || r.n > last)
        continue;
      Rational q = 1 - r.probability;
      if (q <= 0)
        throw Error("degenerate fit: probability 1 at n = " + std::to_string(r.n));
      xs.push_back(double(r.n));
      ys.push_back(std::log(static_cast<double>(q)));
    }
    if (xs.size() < 5)
      throw Error("convergence_fit needs at least 5 rows");
    if (std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys[0]; }))
      throw Error("degenerate fit: constant table");
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= double(xs.size());
    my /= double(xs.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    Fit f;
    f.slope     = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.target    = std::log((1 + std::sqrt(3.0)) / 3);
    f.rows      = xs.size();
    return f;
  }

}  // namespace rank74
