#ifndef BOOLINV_DEFINITE_LANG_HPP_
#define BOOLINV_DEFINITE_LANG_HPP_

// Words over a finite alphabet {0..n-1}, prefix codes, and languages of the
// form X + YA* (X, Y finite) kept in a unique normal form.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "boolinv/error.hpp"

namespace boolinv {

  using Word = std::vector<std::uint32_t>;

  //! Shorter words first, then lexicographic.
  struct Shortlex {
    bool operator()(Word const& a, Word const& b) const {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return a < b;
    }
  };

  using WordSet = std::set<Word, Shortlex>;

  // Words are rendered as digit strings; the library itself has no alphabet
  // limit.
  inline constexpr std::size_t render_alphabet_cap = 10;
  inline constexpr std::size_t enumeration_cap     = std::size_t{1} << 20;

  inline std::string to_string(Word const& w) {
    std::string out;
    for (auto s : w) {
      if (s >= render_alphabet_cap) {
        fail(error_kind::malformed_input, "symbol too large to render as a digit");
      }
      out += static_cast<char>('0' + s);
    }
    return out;
  }

  inline Word parse_word(std::string const& s, std::size_t n) {
    Word w;
    for (char c : s) {
      if (c < '0' || c > '9' || static_cast<std::size_t>(c - '0') >= n) {
        fail(error_kind::malformed_input,
             "'" + s + "' is not a word over an alphabet of size " + std::to_string(n));
      }
      w.push_back(static_cast<std::uint32_t>(c - '0'));
    }
    return w;
  }

  inline Word concat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  inline bool is_prefix(Word const& u, Word const& w) {
    return u.size() <= w.size() && std::equal(u.begin(), u.end(), w.begin());
  }

  //! w with its prefix u removed; u must be a prefix of w.
  inline Word strip_prefix(Word const& u, Word const& w) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(u.size()), w.end());
  }

  inline bool is_prefix_code(WordSet const& words) {
    for (auto const& u : words) {
      for (auto const& w : words) {
        if (u != w && is_prefix(u, w)) {
          return false;
        }
      }
    }
    return true;
  }

  //! The member of Y that is a prefix of w, if any (unique for a prefix
  //! code; the shortest otherwise).
  inline std::optional<Word> prefix_in(WordSet const& Y, Word const& w) {
    Word p;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      if (Y.count(p)) {
        return p;
      }
      if (i < w.size()) {
        p.push_back(w[i]);
      }
    }
    return std::nullopt;
  }

  inline std::size_t max_length(WordSet const& ws) {
    std::size_t m = 0;
    for (auto const& w : ws) {
      m = std::max(m, w.size());
    }
    return m;
  }

  inline void check_words(WordSet const& ws, std::size_t n) {
    for (auto const& w : ws) {
      for (auto s : w) {
        if (s >= n) {
          fail(error_kind::malformed_input, "symbol out of range for the alphabet");
        }
      }
    }
  }

  //! wA* is contained in X + YA*.
  inline bool decide_unbounded(std::size_t    n,
                               WordSet const& X,
                               WordSet const& Y,
                               Word const&    w) {
    if (prefix_in(Y, w)) {
      return true;
    }
    if (X.empty() || w.size() > max_length(X) || !X.count(w)) {
      return false;
    }
    Word next = w;
    next.push_back(0);
    for (std::uint32_t a = 0; a < n; ++a) {
      next.back() = a;
      if (!decide_unbounded(n, X, Y, next)) {
        return false;
      }
    }
    return true;
  }

  //! X + YA* in normal form: `code` is the minimal prefix code of the
  //! unbounded words, `bounded` the remaining members.
  struct DefiniteLang {
    std::size_t alphabet = 2;
    WordSet     bounded;
    WordSet     code;

    friend bool operator==(DefiniteLang const&, DefiniteLang const&) = default;
  };

  inline bool member(DefiniteLang const& L, Word const& w) {
    return L.bounded.count(w) || prefix_in(L.code, w).has_value();
  }

  inline DefiniteLang normalize(std::size_t n, WordSet const& X, WordSet const& Y) {
    if (n == 0) {
      fail(error_kind::malformed_input, "alphabet must be non-empty");
    }
    check_words(X, n);
    check_words(Y, n);
    std::set<Word> prefixes;
    for (auto const* S : {&X, &Y}) {
      for (auto const& w : *S) {
        for (std::size_t i = 0; i <= w.size(); ++i) {
          prefixes.emplace(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
    }
    DefiniteLang out{n, {}, {}};
    // Walk the trie of prefixes; below an unbounded word there is nothing
    // more to record.
    auto walk = [&](auto&& self, Word const& w) -> void {
      if (decide_unbounded(n, X, Y, w)) {
        out.code.insert(w);
        return;
      }
      if (X.count(w)) {
        out.bounded.insert(w);
      }
      Word next = w;
      next.push_back(0);
      for (std::uint32_t a = 0; a < n; ++a) {
        next.back() = a;
        if (prefixes.count(next)) {
          self(self, next);
        }
      }
    };
    if (!prefixes.empty()) {
      walk(walk, Word{});
    }
    return out;
  }

  inline DefiniteLang normalize(DefiniteLang const& L) {
    return normalize(L.alphabet, L.bounded, L.code);
  }

  inline DefiniteLang empty_language(std::size_t n) {
    return DefiniteLang{n, {}, {}};
  }

  inline DefiniteLang full_language(std::size_t n) {
    return DefiniteLang{n, {}, {Word{}}};
  }

  inline std::size_t max_word_length(DefiniteLang const& L) {
    return std::max(max_length(L.bounded), max_length(L.code));
  }

  //! Every word of length <= k, in shortlex order.
  inline std::vector<Word> words_up_to(std::size_t n, std::size_t k) {
    std::size_t total = 1, layer = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      layer *= n;
      total += layer;
      if (total > enumeration_cap) {
        fail(error_kind::size_cap, "word enumeration exceeds the cap");
      }
    }
    std::vector<Word> out{Word{}};
    std::size_t       begin = 0;
    for (std::size_t len = 1; len <= k; ++len) {
      std::size_t const end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (std::uint32_t a = 0; a < n; ++a) {
          Word w = out[i];
          w.push_back(a);
          out.push_back(std::move(w));
        }
      }
      begin = end;
    }
    return out;
  }

  enum class lang_op { union_, intersect, difference, complement };

  //! Boolean operations through the exact depth-k form: with k above every
  //! stored word length, L = (L n A^{<k}) + (L n A^k)A*.
  inline DefiniteLang combine(lang_op                            op,
                              DefiniteLang const&                L1,
                              std::optional<DefiniteLang> const& L2 = std::nullopt) {
    if (op != lang_op::complement && !L2) {
      fail(error_kind::malformed_input, "binary language operation needs two operands");
    }
    if (L2 && L2->alphabet != L1.alphabet) {
      fail(error_kind::malformed_input, "languages over different alphabets");
    }
    std::size_t const n = L1.alphabet;
    std::size_t       k = 1 + max_word_length(L1);
    if (L2) {
      k = std::max(k, 1 + max_word_length(*L2));
    }
    WordSet X, Y;
    for (auto const& w : words_up_to(n, k)) {
      bool a = member(L1, w);
      bool b = L2 && member(*L2, w);
      bool in = false;
      switch (op) {
        case lang_op::union_: in = a || b; break;
        case lang_op::intersect: in = a && b; break;
        case lang_op::difference: in = a && !b; break;
        case lang_op::complement: in = !a; break;
      }
      if (in) {
        (w.size() < k ? X : Y).insert(w);
      }
    }
    return normalize(n, X, Y);
  }

  inline bool lang_equal(DefiniteLang const& L1, DefiniteLang const& L2) {
    return L1.alphabet == L2.alphabet && normalize(L1) == normalize(L2);
  }

  inline bool is_empty(DefiniteLang const& L) {
    auto N = normalize(L);
    return N.bounded.empty() && N.code.empty();
  }

  //! L1 contained in L2.
  inline bool lang_subset(DefiniteLang const& L1, DefiniteLang const& L2) {
    return is_empty(combine(lang_op::difference, L1, L2));
  }

  struct Essential {
    bool    essential = false;
    WordSet complement;  // A* \ YA*, when finite
  };

  //! YA* is essential exactly when its complement is finite.
  inline Essential is_essential(WordSet const& Y, std::size_t n) {
    if (!is_prefix_code(Y)) {
      fail(error_kind::malformed_input, "not a prefix code");
    }
    check_words(Y, n);
    std::size_t const m = max_length(Y);
    Essential         out;
    if (Y.empty()) {
      return out;
    }
    out.essential = true;
    for (auto const& w : words_up_to(n, m)) {
      if (prefix_in(Y, w)) {
        continue;
      }
      if (w.size() == m) {
        out.essential = false;
        out.complement.clear();
        return out;
      }
      out.complement.insert(w);
    }
    return out;
  }

}  // namespace boolinv

#endif  // BOOLINV_DEFINITE_LANG_HPP_
