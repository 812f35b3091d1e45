#include "rank74/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <boost/version.hpp>
#include <Eigen/Core>

#include "CLI11.hpp"
#include "rank74/census.hpp"
#include "rank74/certificates.hpp"
#include "rank74/cobordism.hpp"
#include "rank74/complex.hpp"
#include "rank74/error.hpp"
#include "rank74/rgraph.hpp"
#include "rank74/word.hpp"

#ifndef RANK74_VERSION
#define RANK74_VERSION "0.0.0"
#endif

namespace rank74::cli {

  using nlohmann::json;

  json RunConfig::to_json() const {
    return {{"command", command},
            {"word", word},
            {"kind", kind},
            {"format", format},
            {"pattern", pattern},
            {"semantics", semantics},
            {"mode", mode},
            {"property", property},
            {"n", n},
            {"trials", trials},
            {"seed", seed},
            {"max_cycle", max_cycle},
            {"max_cycles", max_cycles},
            {"annulus_L", annulus_L},
            {"budget", budget},
            {"bound", bound},
            {"fixture", fixture},
            {"closed", closed}};
  }

  json versions() {
    std::ostringstream eigen;
    eigen << EIGEN_WORLD_VERSION << '.' << EIGEN_MAJOR_VERSION << '.' << EIGEN_MINOR_VERSION;
    std::ostringstream nl;
    nl << NLOHMANN_JSON_VERSION_MAJOR << '.' << NLOHMANN_JSON_VERSION_MINOR << '.'
       << NLOHMANN_JSON_VERSION_PATCH;
    return {{"rank74", RANK74_VERSION},
            {"boost", BOOST_LIB_VERSION},
            {"eigen", eigen.str()},
            {"nlohmann_json", nl.str()}};
  }

  namespace {

    struct Usage : Error {
      using Error::Error;
    };

    json report(RunConfig const& c) {
      return {{"config", c.to_json()}, {"versions", versions()}};
    }

    void emit(std::ostream& out, json const& j) {
      out << j.dump(2) << '\n';
    }

    void need_word(RunConfig const& c) {
      if (c.word.empty())
        throw Usage("--word is required");
    }

    void need_format(RunConfig const& c, std::initializer_list<char const*> allowed) {
      for (auto const* f : allowed)
        if (c.format == f)
          return;
      throw Usage("format '" + c.format + "' not supported by " + c.command);
    }

    int cmd_build(RunConfig const& c, std::ostream& out) {
      need_word(c);
      need_format(c, {"json"});
      auto w = parse_word(c.word);
      auto p = close_up(w);
      auto j = report(c);
      j["word"]       = to_string(w);
      j["canonical"]  = canonicalize(w).str();
      j["complex"]    = to_json(p);
      j["validation"] = validate(p, Mode::closed).to_json();
      j["group"]      = group_presentation(p).to_json();
      if (c.out.empty()) {
        emit(out, j);
      } else {
        std::ofstream f(c.out);
        if (!f)
          throw Usage("cannot write " + c.out);
        emit(f, j);
        out << c.out << ": " << p.size() << " triangles\n";
      }
      return j["validation"]["valid"].get<bool>() ? ok : negative;
    }

    int cmd_rgraph(RunConfig const& c, std::ostream& out, std::ostream& err) {
      need_word(c);
      need_format(c, {"json", "dot"});
      auto w = parse_word(c.word);
      auto g = c.closed ? r_graph(close_up(w)) : r_graph(w);
      if (c.format == "dot") {
        out << g.to_dot(to_string(w));
      } else {
        auto j     = report(c);
        j["word"]  = to_string(w);
        j["graph"] = g.to_json();
        emit(out, j);
      }
      if (!c.fixture)
        return ok;
      if (c.closed)
        throw Usage("--fixture compares the open graph; drop --closed");
      std::string   path = std::string(RANK74_DATA_DIR) + "/fixtures/rgraph_" + to_string(w) + ".json";
      std::ifstream in(path);
      if (!in)
        throw Usage("no fixture for " + to_string(w));
      auto golden = edge_multiset(json::parse(in)["edges"]);
      if (golden == g.edge_multiset()) {
        err << "fixture " << to_string(w) << ": pass\n";
        return ok;
      }
      err << "fixture " << to_string(w) << ": MISMATCH\n";
      return negative;
    }

    int certify_z2(RunConfig const& c, Word const& w, std::ostream& out) {
      Z2Bounds b;
      b.max_cycle  = c.max_cycle;
      b.max_cycles = c.max_cycles;
      b.annulus_L  = c.annulus_L;
      b.budget     = c.budget;
      auto res     = z2_certificate(w, b);
      auto j       = report(c);
      j["annulus_L_used"] = res.annulus_L_used;
      int status = inconclusive;
      if (res.witness) {
        auto p      = close_up(rotations(w)[res.witness->rotation]);
        bool ver    = verify_torus(*res.witness, p);
        j["witness"]  = res.witness->to_json(p);
        j["verified"] = ver;
        status        = ver ? ok : inconclusive;
      }
      j["status"] = status == ok ? "witness" : "inconclusive";
      emit(out, j);
      return status;
    }

    int certify_exprank(RunConfig const& c, Word const& w, std::ostream& out) {
      CycleSearch s;
      s.max_len = c.max_cycle;
      auto res  = exp_rank_certificate(w, s);
      auto j    = report(c);
      j["pattern_route"] = res.pattern_route;
      j["graph_route"]   = res.graph_route;
      j["agree"]         = res.agree();
      json pats          = json::array();
      for (auto const& m : res.patterns)
        pats.push_back(m.to_json());
      j["patterns"] = pats;
      int status    = ok;
      if (res.witness) {
        auto g        = r_graph(rotations(w)[res.witness->rotation]);
        j["witness"]  = res.witness->to_json(g);
        j["verified"] = verify_exp_rank(*res.witness, g);
      } else if (!res.pattern_route) {
        // a non-backtracking pair, if any, fits in twice the edge count
        bool exhaustive = true;
        for (auto const& rot : rotations(w)) {
          auto g = r_graph(rot);
          if (c.max_cycle < 2 * g.edges.size() || !find_cycles(g, s).complete)
            exhaustive = false;
        }
        status = exhaustive ? negative : inconclusive;
      }
      j["status"] = status == ok ? "witness" : status == negative ? "none" : "inconclusive";
      emit(out, j);
      return status;
    }

    int certify_meso(RunConfig const& c, Word const& w, std::ostream& out) {
      auto j     = report(c);
      auto m     = mesoscopic_certificate(w);
      int status = negative;
      if (m) {
        j["witness"] = m->to_json();
        status       = m->all() ? ok : inconclusive;
      }
      j["status"] = status == ok ? "witness" : status == negative ? "none" : "inconclusive";
      emit(out, j);
      return status;
    }

    int cmd_certify(RunConfig const& c, std::ostream& out) {
      need_word(c);
      need_format(c, {"json"});
      auto w = parse_word(c.word);
      if (c.kind == "z2")
        return certify_z2(c, w, out);
      if (c.kind == "exprank")
        return certify_exprank(c, w, out);
      if (c.kind == "meso")
        return certify_meso(c, w, out);
      throw Usage("unknown kind '" + c.kind + "'");
    }

    CensusTable recurrence(std::size_t n, CensusPattern p) {
      auto t = recurrence_table(std::max<std::size_t>(n, 3), p);
      t.rows.resize(n);
      return t;
    }

    std::string compare_csv(CensusTable const& r, CensusTable const& e) {
      std::ostringstream s;
      s << "n,recurrence_E',enumeration_E',recurrence_E'',enumeration_E'',status\n";
      for (std::size_t i = 0; i < r.rows.size(); ++i) {
        auto const &a = r.rows[i], &b = e.rows[i];
        bool same     = a.avoiding == b.avoiding && a.terminal == b.terminal;
        s << a.n << ',' << a.avoiding << ',' << b.avoiding << ',' << a.terminal << ','
          << b.terminal << ',' << (same ? "agree" : "differ") << '\n';
      }
      return s.str();
    }

    json compare_json(CensusTable const& r, CensusTable const& e) {
      json rows = json::array();
      for (std::size_t i = 0; i < r.rows.size(); ++i) {
        auto const &a = r.rows[i], &b = e.rows[i];
        bool same     = a.avoiding == b.avoiding && a.terminal == b.terminal;
        rows.push_back({{"n", a.n},
                        {"recurrence", {a.avoiding.str(), a.terminal.str()}},
                        {"enumeration", {b.avoiding.str(), b.terminal.str()}},
                        {"status", same ? "agree" : "differ"}});
      }
      return rows;
    }

    int cmd_census(RunConfig const& c, std::ostream& out) {
      need_format(c, {"json", "csv"});
      if (c.n == 0)
        throw Usage("--n must be >= 1");
      auto p = parse_census_pattern(c.pattern);
      auto s = parse_semantics(c.semantics);
      if (c.mode == "recurrence") {
        auto t = recurrence(c.n, p);
        if (c.format == "csv") {
          out << t.to_csv();
        } else {
          auto j      = report(c);
          j["table"]  = t.to_json();
          j["growth"] = growth_constants(p).to_json();
          emit(out, j);
        }
      } else if (c.mode == "enumeration") {
        auto t = enumeration_table(c.n, p, s, c.bound);
        if (c.format == "csv") {
          out << t.to_csv();
        } else {
          auto j     = report(c);
          j["table"] = t.to_json();
          emit(out, j);
        }
      } else if (c.mode == "compare") {
        auto r = recurrence(c.n, p);
        auto e = enumeration_table(c.n, p, s, c.bound);
        if (c.format == "csv") {
          out << compare_csv(r, e);
        } else {
          auto j           = report(c);
          j["recurrence"]  = r.to_json();
          j["enumeration"] = e.to_json();
          j["comparison"]  = compare_json(r, e);
          emit(out, j);
        }
      } else {
        throw Usage("unknown mode '" + c.mode + "'");
      }
      return ok;
    }

    int cmd_sample(RunConfig const& c, std::ostream& out) {
      need_format(c, {"json", "csv"});
      if (c.n == 0)
        throw Usage("--n must be >= 1");
      auto p = parse_census_pattern(c.pattern);
      auto e = monte_carlo(c.n, c.trials, c.property, c.seed, p);
      std::optional<Rational> exact;
      if ((c.property == "exprank-pattern-a" || c.property == "pattern") && c.n <= c.bound) {
        auto q  = c.property == "pattern" ? p : CensusPattern::Y00Y00;
        auto k  = enumerate_counts(c.n, q, Semantics::class_, c.bound);
        exact   = 1 - Rational(k.avoiding, k.total);
      }
      if (c.format == "csv") {
        out << "property,n,trials,hits,seed,estimate,lower,upper,exact\n"
            << e.property << ',' << e.n << ',' << e.trials << ',' << e.hits << ',' << e.seed
            << ',' << e.point << ',' << e.lower << ',' << e.upper << ','
            << (exact ? exact->str() : "") << '\n';
        return ok;
      }
      auto j        = report(c);
      j["estimate"] = e.to_json();
      if (exact) {
        double x       = static_cast<double>(*exact);
        j["exact"]     = {{"value", exact->str()}, {"float", x},
                          {"in_ci", e.lower <= x && x <= e.upper}};
      }
      emit(out, j);
      return ok;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App  app{"rank74: triangle complexes, R-graphs, certificates and census"};
    app.require_subcommand(1);
    auto word = [&](CLI::App* s) {
      s->add_option("--word", c.word, "dot-separated generators, e.g. X01.Y00");
    };
    auto bounds = [&](CLI::App* s) {
      s->add_option("--max-cycle", c.max_cycle, "longest R-graph cycle searched")
          ->capture_default_str();
      s->add_option("--max-cycles", c.max_cycles, "R-graph cycles tried per rotation")
          ->capture_default_str();
      s->add_option("--annulus-L", c.annulus_L, "longest strip period searched")
          ->capture_default_str();
      s->add_option("--budget", c.budget, "gallery steps per strip enumeration")
          ->capture_default_str();
    };
    auto format = [&](CLI::App* s) {
      s->add_option("--format", c.format)
          ->check(CLI::IsMember({"json", "dot", "csv"}))
          ->capture_default_str();
    };

    auto* build = app.add_subcommand("build", "closed-up complex, validation and group presentation");
    word(build);
    format(build);
    build->add_option("--out", c.out, "write the report to this file");

    auto* rg = app.add_subcommand("rgraph", "the graph R(w)");
    word(rg);
    format(rg);
    rg->add_flag("--fixture", c.fixture, "compare with the bundled golden graph");
    rg->add_flag("--closed", c.closed, "graph of the closed-up complex");

    auto* cert = app.add_subcommand("certify", "z2 / exprank / meso witnesses");
    word(cert);
    format(cert);
    bounds(cert);
    cert->add_option("--kind", c.kind)
        ->check(CLI::IsMember({"z2", "exprank", "meso"}))
        ->capture_default_str();

    auto* cen = app.add_subcommand("census", "pattern-avoidance counts");
    format(cen);
    cen->add_option("--n", c.n, "largest length")->capture_default_str();
    cen->add_option("--pattern", c.pattern, "Y00Y00, Y0*Y0* or omega0")->capture_default_str();
    cen->add_option("--mode", c.mode)
        ->check(CLI::IsMember({"recurrence", "enumeration", "compare"}))
        ->capture_default_str();
    cen->add_option("--semantics", c.semantics)
        ->check(CLI::IsMember({"class", "representative"}))
        ->capture_default_str();
    cen->add_option("--bound", c.bound, "largest length enumerated")->capture_default_str();

    auto* smp = app.add_subcommand("sample", "Monte Carlo estimate under the uniform measure");
    format(smp);
    smp->add_option("--n", c.n)->capture_default_str();
    smp->add_option("--trials", c.trials)->capture_default_str();
    smp->add_option("--seed", c.seed)->capture_default_str();
    smp->add_option("--property", c.property)
        ->check(CLI::IsMember({"exprank-pattern-a", "pattern", "exprank", "z2", "meso"}))
        ->capture_default_str();
    smp->add_option("--pattern", c.pattern, "for --property pattern")->capture_default_str();
    smp->add_option("--bound", c.bound, "largest length for the exact value")
        ->capture_default_str();

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::ParseError const& e) {
      err << e.what() << '\n';
      return usage;
    }

    try {
      if (build->parsed()) {
        c.command = "build";
        return cmd_build(c, out);
      }
      if (rg->parsed()) {
        c.command = "rgraph";
        return cmd_rgraph(c, out, err);
      }
      if (cert->parsed()) {
        c.command = "certify";
        return cmd_certify(c, out);
      }
      if (cen->parsed()) {
        c.command = "census";
        return cmd_census(c, out);
      }
      c.command = "sample";
      return cmd_sample(c, out);
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }
  }

}  // namespace rank74::cli
