#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rank74 {

  enum class Letter : unsigned char { X, Y };

  // Z_ij: boundary maps precomposed with sigma^i (left) and sigma^j (right).
  // The semigroup is generated by the six standard ones; Y10 and Y11 are
  // accepted as the (equivalent) twisted arrows.
  struct Generator {
    Letter letter = Letter::X;
    bool   left   = false;
    bool   right  = false;

    bool        is_standard() const {
      return letter == Letter::X || !left;
    }
    std::string name() const;
    // "X01"; throws ParseError
    static Generator parse(std::string_view);

    friend auto operator<=>(Generator const&, Generator const&) = default;
  };

  using Word = std::vector<Generator>;

  std::vector<Generator> const& standard_generators();

  // "X01.Y00.X10"
  Word        parse_word(std::string_view);
  std::string to_string(Word const&);

  struct CanonicalWord {
    std::vector<Letter> letters;
    std::vector<bool>   chain;  // t_0 .. t_n

    std::size_t size() const {
      return letters.size();
    }
    // "XYX|0101"
    std::string str() const;
    static CanonicalWord parse(std::string_view);
    // i_1 = t_0, j_k = t_k, i_k = 0 for k > 1
    Word representative() const;
    bool valid() const;

    friend auto operator<=>(CanonicalWord const&, CanonicalWord const&)
        = default;
  };

  // t_0 = i_1, t_k = j_k xor i_{k+1}, t_n = j_n
  CanonicalWord chain_of(Word const&);
  CanonicalWord canonicalize(Word const&);
  CanonicalWord canonicalize(CanonicalWord);
  bool          equivalent_words(Word const&, Word const&);

  std::vector<Word> rotations(Word const&);

  // every canonical word of length n, in lexicographic order of (letters,
  // chain); there are 2*3^n of them
  std::vector<CanonicalWord> canonical_words(std::size_t n);

}  // namespace rank74
