#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rank74 {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), _pos(pos) {}
    std::size_t position() const noexcept { return _pos; }

   private:
    std::size_t _pos;
  };

  // Raised when two glued labels would need opposite orientations.
  class MergeConflict : public Error {
   public:
    using Error::Error;
  };

  class BoundExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace rank74
