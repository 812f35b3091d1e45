#include "rank74/word.hpp"

#include <algorithm>

#include "rank74/error.hpp"

namespace rank74 {

  std::string Generator::name() const {
    std::string s(1, letter == Letter::X ? 'X' : 'Y');
    s += left ? '1' : '0';
    s += right ? '1' : '0';
    return s;
  }

  Generator Generator::parse(std::string_view s) {
    if (s.size() != 3)
      throw ParseError("generator must look like X01, got '" + std::string(s)
                           + "'",
                       0);
    Generator g;
    if (s[0] == 'X')
      g.letter = Letter::X;
    else if (s[0] == 'Y')
      g.letter = Letter::Y;
    else
      throw ParseError("unknown letter '" + std::string(1, s[0]) + "'", 0);
    for (std::size_t i = 1; i < 3; ++i) {
      if (s[i] != '0' && s[i] != '1')
        throw ParseError("twist must be 0 or 1", i);
    }
    g.left  = s[1] == '1';
    g.right = s[2] == '1';
    return g;
  }

  std::vector<Generator> const& standard_generators() {
    static std::vector<Generator> const g = {{Letter::X, false, false},
                                             {Letter::X, false, true},
                                             {Letter::X, true, false},
                                             {Letter::X, true, true},
                                             {Letter::Y, false, false},
                                             {Letter::Y, false, true}};
    return g;
  }

  Word parse_word(std::string_view s) {
    Word        w;
    std::size_t start = 0;
    if (s.empty())
      throw ParseError("empty word", 0);
    while (true) {
      auto dot = s.find('.', start);
      auto tok = s.substr(start, dot == std::string_view::npos ? s.npos
                                                               : dot - start);
      try {
        w.push_back(Generator::parse(tok));
      } catch (ParseError const& e) {
        throw ParseError(std::string(e.what()).substr(
                             0, std::string(e.what()).find(" at position")),
                         start + e.position());
      }
      if (dot == std::string_view::npos)
        break;
      start = dot + 1;
    }
    return w;
  }

  std::string to_string(Word const& w) {
    std::string out;
    for (auto const& g : w) {
      if (!out.empty())
        out += '.';
      out += g.name();
    }
    return out;
  }

  std::string CanonicalWord::str() const {
    std::string out;
    for (auto l : letters)
      out += l == Letter::X ? 'X' : 'Y';
    out += '|';
    for (bool b : chain)
      out += b ? '1' : '0';
    return out;
  }

  CanonicalWord CanonicalWord::parse(std::string_view s) {
    auto bar = s.find('|');
    if (bar == s.npos)
      throw ParseError("canonical word needs '|'", 0);
    CanonicalWord c;
    for (std::size_t i = 0; i < bar; ++i) {
      if (s[i] != 'X' && s[i] != 'Y')
        throw ParseError("letter must be X or Y", i);
      c.letters.push_back(s[i] == 'X' ? Letter::X : Letter::Y);
    }
    for (std::size_t i = bar + 1; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1')
        throw ParseError("chain bit must be 0 or 1", i);
      c.chain.push_back(s[i] == '1');
    }
    if (c.letters.empty() || c.chain.size() != c.letters.size() + 1)
      throw ParseError("chain must have one more bit than letters", bar);
    return c;
  }

  Word CanonicalWord::representative() const {
    Word w;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      w.push_back({letters[k], k == 0 ? bool(chain[0]) : false,
                   bool(chain[k + 1])});
    }
    return w;
  }

  bool CanonicalWord::valid() const {
    if (letters.empty() || chain.size() != letters.size() + 1)
      return false;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (letters[k] == Letter::Y && chain[k])
        return false;
    }
    return true;
  }

  CanonicalWord chain_of(Word const& w) {
    if (w.empty())
      throw Error("empty word");
    CanonicalWord c;
    std::size_t   n = w.size();
    c.chain.assign(n + 1, false);
    c.chain[0] = w[0].left;
    for (std::size_t k = 0; k < n; ++k) {
      c.letters.push_back(w[k].letter);
      c.chain[k + 1] = w[k].right != (k + 1 < n ? w[k + 1].left : false);
    }
    return c;
  }

  CanonicalWord canonicalize(CanonicalWord c) {
    for (std::size_t k = 0; k < c.letters.size(); ++k) {
      if (c.letters[k] == Letter::Y && c.chain[k]) {
        c.chain[k]     = false;
        c.chain[k + 1] = !c.chain[k + 1];
      }
    }
    return c;
  }

  CanonicalWord canonicalize(Word const& w) {
    return canonicalize(chain_of(w));
  }

  bool equivalent_words(Word const& a, Word const& b) {
    return canonicalize(a) == canonicalize(b);
  }

  std::vector<Word> rotations(Word const& w) {
    std::vector<Word> out;
    for (std::size_t r = 0; r < w.size(); ++r) {
      Word v(w.begin() + r, w.end());
      v.insert(v.end(), w.begin(), w.begin() + r);
      out.push_back(std::move(v));
    }
    return out;
  }

  std::vector<CanonicalWord> canonical_words(std::size_t n) {
    std::vector<CanonicalWord> out;
    if (n == 0)
      return out;
    for (std::size_t lm = 0; lm < (std::size_t(1) << n); ++lm) {
      for (std::size_t cm = 0; cm < (std::size_t(1) << (n + 1)); ++cm) {
        CanonicalWord c;
        for (std::size_t k = 0; k < n; ++k)
          c.letters.push_back((lm >> (n - 1 - k)) & 1 ? Letter::Y : Letter::X);
        for (std::size_t k = 0; k <= n; ++k)
          c.chain.push_back((cm >> (n - k)) & 1);
        if (c.valid())
          out.push_back(std::move(c));
      }
    }
    return out;
  }

}  // namespace rank74
