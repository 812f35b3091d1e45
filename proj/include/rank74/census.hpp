#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "rank74/word.hpp"

namespace rank74 {

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  // Y00.Y00 as a literal block, the family Y0*.Y0*, or Y00.Y00.Y00
  enum class CensusPattern { Y00Y00, Y0sY0s, omega0 };
  enum class Semantics { representative, class_ };

  CensusPattern parse_census_pattern(std::string const&);
  std::string   to_string(CensusPattern);
  Semantics     parse_semantics(std::string const&);
  std::string   to_string(Semantics);
  std::size_t   pattern_length(CensusPattern);

  struct CensusRow {
    std::size_t n = 0;
    BigInt      total;        // |E_n|
    BigInt      avoiding;     // |E'_n|
    BigInt      terminal;     // |E''_n|
    Rational    probability;  // 1 - |E'_n|/|E_n|
    double      ratio = 0;    // |E'_n|/|E'_{n-1}|, 0 on the first row
  };

  struct CensusTable {
    std::string            source;  // "recurrence" or "enumeration"
    CensusPattern          pattern = CensusPattern::Y00Y00;
    std::vector<CensusRow> rows;
    std::string            derivation;

    std::string    to_csv() const;
    nlohmann::json to_json() const;
  };

  // ---- recurrence mode

  CensusTable recurrence_table(std::size_t n_max, CensusPattern p = CensusPattern::Y00Y00);

  // numbers a + b*sqrt(3)
  struct QSqrt3 {
    BigInt a, b;
    friend bool   operator==(QSqrt3 const&, QSqrt3 const&) = default;
    friend QSqrt3 operator+(QSqrt3 const& x, QSqrt3 const& y) {
      return {x.a + y.a, x.b + y.b};
    }
    friend QSqrt3 operator*(QSqrt3 const& x, QSqrt3 const& y) {
      return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
  };

  struct GrowthConstants {
    double                            g = 3;
    double                            g_prime = 0;  // largest root of the terminal recurrence
    std::vector<std::complex<double>> roots;
    bool                              exact_roots = false;  // 1 +- sqrt3 solve x^2 = 2x + 2 exactly
    nlohmann::json                    to_json() const;
  };

  // roots of x^m = 2(x^{m-1} + ... + 1), m the pattern length
  GrowthConstants growth_constants(CensusPattern p);

  // ---- enumeration

  struct Counts {
    std::size_t n = 0;
    BigInt      total, avoiding, containing, terminal;
    nlohmann::json to_json() const;
  };

  // does some representative of the class contain the pattern (class_), or
  // the canonical representative itself (representative); linear, not cyclic
  bool contains_pattern(CanonicalWord const& c, CensusPattern p, Semantics s);

  Counts enumerate_counts(std::size_t n, CensusPattern p, Semantics s, std::size_t bound = 12);

  CensusTable enumeration_table(std::size_t n_max, CensusPattern p, Semantics s, std::size_t bound = 12);

  // ---- sampling

  // uniform over the 2*3^n canonical words
  CanonicalWord uniform_sample(std::size_t n, std::uint64_t seed);
  std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

  struct Estimate {
    std::string   property;
    std::size_t   n = 0;
    std::size_t   trials = 0, hits = 0;
    std::uint64_t seed = 0;
    double        point = 0, lower = 0, upper = 0, level = 0.95;
    nlohmann::json to_json() const;
  };

  std::pair<double, double> wilson_interval(std::size_t hits, std::size_t trials, double level = 0.95);

  // property: exprank-pattern-a, exprank, z2, meso, pattern (with p)
  bool     sample_property(std::string const& property, CanonicalWord const& w,
                           CensusPattern p = CensusPattern::Y00Y00);
  Estimate monte_carlo(std::size_t n, std::size_t trials, std::string const& property,
                       std::uint64_t seed, CensusPattern p = CensusPattern::Y00Y00);

  // p-value of Pearson's test of uniformity over the given bin counts
  double chi_square_uniform(std::vector<std::size_t> const& counts);

  struct Fit {
    double      slope = 0, intercept = 0;
    double      target = 0;  // log((1+sqrt3)/3)
    std::size_t rows = 0;
    nlohmann::json to_json() const;
  };

  // least squares of log(1 - P_n) against n over rows with first <= n <= last
  Fit convergence_fit(CensusTable const& t, std::size_t first = 0, std::size_t last = SIZE_MAX);

}  // namespace rank74
