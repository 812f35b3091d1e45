#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace rank74::cli {

  enum Status : int { ok = 0, usage = 1, negative = 2, inconclusive = 3 };

  // Everything a report depends on; defaults are part of the interface.
  struct RunConfig {
    std::string   command;
    std::string   word;
    std::string   kind     = "z2";          // certify
    std::string   format   = "json";
    std::string   pattern  = "Y00Y00";
    std::string   semantics = "class";
    std::string   mode     = "recurrence";  // census
    std::string   property = "exprank-pattern-a";
    std::string   out;                      // build: write here instead of stdout
    std::size_t   n          = 3;
    std::size_t   trials     = 10000;
    std::uint64_t seed       = 1;
    std::size_t   max_cycle  = 12;
    std::size_t   max_cycles = 500;
    std::size_t   annulus_L  = 8;
    std::size_t   budget     = 20000000;
    std::size_t   bound      = 12;  // enumeration length limit
    bool          fixture    = false;
    bool          closed     = false;  // rgraph of the closed-up complex

    nlohmann::json to_json() const;
  };

  nlohmann::json versions();

  // args excludes the program name
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace rank74::cli
