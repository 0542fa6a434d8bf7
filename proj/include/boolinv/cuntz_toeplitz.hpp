#ifndef BOOLINV_CUNTZ_TOEPLITZ_HPP_
#define BOOLINV_CUNTZ_TOEPLITZ_HPP_

// The polycyclic monoid P_n, permissible maps between definite languages
// (the monoid CT(A*)), and the quotient onto the Cuntz inverse monoid C_n.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "boolinv/definite_lang.hpp"
#include "boolinv/error.hpp"
#include "boolinv/semigroup.hpp"

namespace boolinv {

  inline void check_polycyclic_alphabet(std::size_t n) {
    if (n < 2) {
      fail(error_kind::alphabet_too_small, "the polycyclic monoid needs at least two letters");
    }
  }

  inline void check_word(Word const& w, std::size_t n) {
    for (auto s : w) {
      if (s >= n) {
        fail(error_kind::malformed_input, "symbol out of range for the alphabet");
      }
    }
  }

  //! yx^-1, or zero.
  struct PolyElement {
    bool zero = true;
    Word y, x;

    static PolyElement zero_element() { return {}; }
    static PolyElement pair(Word y, Word x) { return {false, std::move(y), std::move(x)}; }
    static PolyElement one() { return pair({}, {}); }

    friend bool operator==(PolyElement const& a, PolyElement const& b) {
      return a.zero == b.zero && (a.zero || (a.y == b.y && a.x == b.x));
    }
  };

  inline void check_poly(std::size_t n, PolyElement const& p) {
    check_polycyclic_alphabet(n);
    if (!p.zero) {
      check_word(p.y, n);
      check_word(p.x, n);
    }
  }

  inline PolyElement poly_inverse(PolyElement const& p) {
    return p.zero ? p : PolyElement::pair(p.x, p.y);
  }

  inline PolyElement poly_product(std::size_t n, PolyElement const& p, PolyElement const& q) {
    check_poly(n, p);
    check_poly(n, q);
    if (p.zero || q.zero) {
      return PolyElement::zero_element();
    }
    // (y,x)(v,u)
    if (is_prefix(p.x, q.y)) {
      return PolyElement::pair(concat(p.y, strip_prefix(p.x, q.y)), q.x);
    }
    if (is_prefix(q.y, p.x)) {
      return PolyElement::pair(p.y, concat(q.x, strip_prefix(q.y, p.x)));
    }
    return PolyElement::zero_element();
  }

  inline bool poly_is_idempotent(PolyElement const& p) {
    return p.zero || p.y == p.x;
  }

  inline bool poly_leq(PolyElement const& p, PolyElement const& q) {
    if (p.zero) {
      return true;
    }
    if (q.zero) {
      return false;
    }
    return is_prefix(q.y, p.y) && is_prefix(q.x, p.x)
           && strip_prefix(q.y, p.y) == strip_prefix(q.x, p.x);
  }

  inline RelationReport poly_relate(std::size_t n, PolyElement const& p, PolyElement const& q) {
    auto const a = poly_product(n, poly_inverse(p), q);
    auto const b = poly_product(n, p, poly_inverse(q));
    RelationReport r;
    r.leq        = poly_leq(p, q);
    r.geq        = poly_leq(q, p);
    r.compatible = poly_is_idempotent(a) && poly_is_idempotent(b);
    r.orthogonal = a.zero && b.zero;
    return r;
  }

  //! Reduces a compatible set to an orthogonal set with the same order
  //! ideal: compatible nonzero pairs that are not orthogonal are comparable,
  //! so dropping the smaller one suffices.
  inline std::vector<PolyElement> orthogonal_generators(std::size_t                     n,
                                                        std::vector<PolyElement> const& gens) {
    std::vector<PolyElement> nz;
    for (auto const& g : gens) {
      check_poly(n, g);
      if (!g.zero && std::find(nz.begin(), nz.end(), g) == nz.end()) {
        nz.push_back(g);
      }
    }
    std::vector<PolyElement> out;
    for (std::size_t i = 0; i < nz.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < nz.size(); ++j) {
        if (i == j) {
          continue;
        }
        auto r = poly_relate(n, nz[i], nz[j]);
        if (!r.compatible) {
          fail(error_kind::not_compatible, "generators are not pairwise compatible");
        }
        if (r.leq) {
          dominated = true;
        } else if (!r.orthogonal && !r.geq) {
          fail(error_kind::not_compatible, "compatible pair is neither comparable nor orthogonal");
        }
      }
      if (!dominated) {
        out.push_back(nz[i]);
      }
    }
    return out;
  }

  // -- permissible maps ------------------------------------------------------

  using WordMap = std::map<Word, Word, Shortlex>;

  //! A bijection between definite languages: a finite part on bounded points
  //! and a table yu -> zu between prefix codes.
  struct PermMap {
    std::size_t alphabet = 2;
    WordMap     finite;
    WordMap     table;

    friend bool operator==(PermMap const&, PermMap const&) = default;
  };

  inline WordSet keys(WordMap const& m) {
    WordSet out;
    for (auto const& [k, v] : m) {
      out.insert(k);
    }
    return out;
  }

  inline WordSet values(WordMap const& m) {
    WordSet out;
    for (auto const& [k, v] : m) {
      out.insert(v);
    }
    return out;
  }

  inline std::optional<Word> pm_apply(PermMap const& m, Word const& w) {
    if (auto it = m.finite.find(w); it != m.finite.end()) {
      return it->second;
    }
    Word p;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      if (auto it = m.table.find(p); it != m.table.end()) {
        return concat(it->second, strip_prefix(p, w));
      }
      if (i < w.size()) {
        p.push_back(w[i]);
      }
    }
    return std::nullopt;
  }

  using WordPairs = std::vector<std::pair<Word, Word>>;

  inline PermMap pm_canonicalize(std::size_t      n,
                                 WordPairs const& finite_pairs,
                                 WordPairs const& table_pairs) {
    if (n == 0) {
      fail(error_kind::malformed_input, "alphabet must be non-empty");
    }
    for (auto const* ps : {&finite_pairs, &table_pairs}) {
      for (auto const& [a, b] : *ps) {
        check_word(a, n);
        check_word(b, n);
      }
    }
    PermMap m{n, {}, {}};

    auto sorted = table_pairs;
    std::sort(sorted.begin(), sorted.end(), [](auto const& a, auto const& b) {
      return Shortlex{}(a.first, b.first);
    });
    for (auto const& [y, z] : sorted) {
      if (auto img = pm_apply(m, y)) {
        if (*img != z) {
          fail(error_kind::inconsistent_graph, "table entries disagree on " + to_string(y));
        }
        continue;
      }
      m.table.emplace(y, z);
    }
    for (auto const& [x, v] : finite_pairs) {
      if (auto img = pm_apply(m, x)) {
        if (*img != v) {
          fail(error_kind::inconsistent_graph, "graph disagrees on " + to_string(x));
        }
        continue;
      }
      m.finite.emplace(x, v);
    }

    // injectivity
    WordSet cod;
    for (auto const& [y, z] : m.table) {
      for (auto const& c : cod) {
        if (is_prefix(c, z) || is_prefix(z, c)) {
          fail(error_kind::not_injective, "table images overlap at " + to_string(z));
        }
      }
      cod.insert(z);
    }
    WordSet fin_img;
    for (auto const& [x, v] : m.finite) {
      if (!fin_img.insert(v).second || prefix_in(cod, v)) {
        fail(error_kind::not_injective, "two words map to " + to_string(v));
      }
    }

    // promote unbounded equivariant points, shortest first
    WordSet candidates;
    for (auto const* src : {&m.finite, &m.table}) {
      for (auto const& [w, img] : *src) {
        for (std::size_t i = 0; i <= w.size(); ++i) {
          candidates.emplace(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
    }
    for (auto const& p : candidates) {
      WordSet const Y = keys(m.table);
      if (prefix_in(Y, p) || !decide_unbounded(n, keys(m.finite), Y, p)) {
        continue;
      }
      Word const z  = *pm_apply(m, p);
      bool       eq = true;
      for (auto const* src : {&m.finite, &m.table}) {
        for (auto const& [w, img] : *src) {
          if (is_prefix(p, w) && img != concat(z, strip_prefix(p, w))) {
            eq = false;
          }
        }
      }
      if (!eq) {
        continue;
      }
      for (auto* src : {&m.finite, &m.table}) {
        std::erase_if(*src, [&](auto const& kv) { return is_prefix(p, kv.first); });
      }
      m.table.emplace(p, z);
    }
    return m;
  }

  inline PermMap pm_canonicalize(PermMap const& m) {
    return pm_canonicalize(m.alphabet, WordPairs(m.finite.begin(), m.finite.end()),
                           WordPairs(m.table.begin(), m.table.end()));
  }

  inline PermMap pm_empty(std::size_t n) {
    return PermMap{n, {}, {}};
  }

  inline PermMap pm_identity(std::size_t n) {
    return PermMap{n, {}, {{Word{}, Word{}}}};
  }

  inline DefiniteLang pm_domain(PermMap const& m) {
    return normalize(m.alphabet, keys(m.finite), keys(m.table));
  }

  inline DefiniteLang pm_codomain(PermMap const& m) {
    return normalize(m.alphabet, values(m.finite), values(m.table));
  }

  //! Finite points that are unbounded in the domain or codomain would break
  //! equivariance on unbounded points.
  inline bool is_permissible(PermMap const& m) {
    auto const X = keys(m.finite), Y = keys(m.table);
    auto const V = values(m.finite), Z = values(m.table);
    for (auto const& [x, v] : m.finite) {
      if (decide_unbounded(m.alphabet, X, Y, x) || decide_unbounded(m.alphabet, V, Z, v)) {
        return false;
      }
    }
    return true;
  }

  inline void check_same_alphabet(PermMap const& a, PermMap const& b) {
    if (a.alphabet != b.alphabet) {
      fail(error_kind::malformed_input, "maps over different alphabets");
    }
  }

  //! m1 after m2.
  inline PermMap pm_compose(PermMap const& m1, PermMap const& m2) {
    check_same_alphabet(m1, m2);
    WordPairs fin, tab;
    for (auto const& [x, v] : m2.finite) {
      if (auto r = pm_apply(m1, v)) {
        fin.emplace_back(x, *r);
      }
    }
    for (auto const& [y, z] : m2.table) {
      // codomain points of m1's finite part inside zA*
      for (auto const& [w, r] : m1.finite) {
        if (is_prefix(z, w)) {
          fin.emplace_back(concat(y, strip_prefix(z, w)), r);
        }
      }
      for (auto const& [y1, z1] : m1.table) {
        if (is_prefix(z, y1)) {
          tab.emplace_back(concat(y, strip_prefix(z, y1)), z1);
        } else if (is_prefix(y1, z)) {
          tab.emplace_back(y, concat(z1, strip_prefix(y1, z)));
        }
      }
    }
    return pm_canonicalize(m1.alphabet, fin, tab);
  }

  inline PermMap pm_inverse(PermMap const& m) {
    WordPairs fin, tab;
    for (auto const& [x, v] : m.finite) {
      fin.emplace_back(v, x);
    }
    for (auto const& [y, z] : m.table) {
      tab.emplace_back(z, y);
    }
    return pm_canonicalize(m.alphabet, fin, tab);
  }

  //! The identity on a definite language.
  inline PermMap pm_identity_on(DefiniteLang const& L) {
    WordPairs fin, tab;
    for (auto const& w : L.bounded) {
      fin.emplace_back(w, w);
    }
    for (auto const& w : L.code) {
      tab.emplace_back(w, w);
    }
    return pm_canonicalize(L.alphabet, fin, tab);
  }

  inline bool pm_leq(PermMap const& a, PermMap const& b) {
    check_same_alphabet(a, b);
    for (auto const& [x, v] : a.finite) {
      if (pm_apply(b, x) != v) {
        return false;
      }
    }
    // b is canonical, so an equivariant cone inside dom b sits below a table
    // entry of b.
    WordSet const Yb = keys(b.table);
    for (auto const& [y, z] : a.table) {
      if (!prefix_in(Yb, y) || pm_apply(b, y) != z) {
        return false;
      }
    }
    return true;
  }

  inline PermMap pm_join(PermMap const& a, PermMap const& b) {
    check_same_alphabet(a, b);
    WordPairs fin(a.finite.begin(), a.finite.end());
    fin.insert(fin.end(), b.finite.begin(), b.finite.end());
    WordPairs tab(a.table.begin(), a.table.end());
    tab.insert(tab.end(), b.table.begin(), b.table.end());
    try {
      return pm_canonicalize(a.alphabet, fin, tab);
    } catch (Error const& e) {
      if (e.kind() == error_kind::inconsistent_graph || e.kind() == error_kind::not_injective) {
        fail(error_kind::not_compatible, "maps are not compatible");
      }
      throw;
    }
  }

  inline RelationReport pm_relate(PermMap const& a, PermMap const& b) {
    RelationReport r;
    r.leq = pm_leq(a, b);
    r.geq = pm_leq(b, a);
    try {
      pm_join(a, b);
      r.compatible = true;
    } catch (Error const& e) {
      if (e.kind() != error_kind::not_compatible) {
        throw;
      }
    }
    r.orthogonal = is_empty(combine(lang_op::intersect, pm_domain(a), pm_domain(b)))
                   && is_empty(combine(lang_op::intersect, pm_codomain(a), pm_codomain(b)));
    return r;
  }

  inline DefiniteLang pm_fix(PermMap const& m) {
    WordSet X, Y;
    for (auto const& [x, v] : m.finite) {
      if (x == v) {
        X.insert(x);
      }
    }
    // yu = zu forces y = z
    for (auto const& [y, z] : m.table) {
      if (y == z) {
        Y.insert(y);
      }
    }
    return normalize(m.alphabet, X, Y);
  }

  inline PermMap pm_restrict(PermMap const& m, DefiniteLang const& L) {
    if (L.alphabet != m.alphabet) {
      fail(error_kind::malformed_input, "language and map over different alphabets");
    }
    if (!lang_subset(L, pm_domain(m))) {
      fail(error_kind::not_sublanguage, "restriction language is not inside the domain");
    }
    return pm_compose(m, pm_identity_on(normalize(L)));
  }

  inline PermMap pm_meet(PermMap const& a, PermMap const& b) {
    check_same_alphabet(a, b);
    auto agree = combine(lang_op::intersect, pm_fix(pm_compose(pm_inverse(b), a)), pm_domain(a));
    return pm_restrict(a, agree);
  }

  inline PermMap pm_subtract(PermMap const& a, PermMap const& b) {
    if (!pm_leq(b, a)) {
      fail(error_kind::not_below, "subtrahend is not below the map");
    }
    return pm_restrict(a, combine(lang_op::difference, pm_domain(a), pm_domain(b)));
  }

  inline PermMap embed_poly(std::size_t n, PolyElement const& p) {
    check_poly(n, p);
    if (p.zero) {
      return pm_empty(n);
    }
    return PermMap{n, {}, {{p.x, p.y}}};
  }

  // -- the Cuntz inverse monoid ------------------------------------------------

  struct CuntzElement {
    std::size_t alphabet = 2;
    WordMap     table;

    friend bool operator==(CuntzElement const&, CuntzElement const&) = default;
  };

  //! Collapses complete sibling families {xa -> za : a in A} into x -> z
  //! until none remain.
  inline WordMap reduce_table(std::size_t n, WordMap t) {
    for (bool changed = true; changed;) {
      changed = false;
      for (auto const& [k, v] : t) {
        if (k.empty() || v.empty() || k.back() != 0 || v.back() != 0) {
          continue;
        }
        Word const x(k.begin(), k.end() - 1), z(v.begin(), v.end() - 1);
        bool       full = true;
        for (std::uint32_t a = 1; a < n && full; ++a) {
          Word xa = x, za = z;
          xa.push_back(a);
          za.push_back(a);
          auto it = t.find(xa);
          full    = it != t.end() && it->second == za;
        }
        if (!full) {
          continue;
        }
        for (std::uint32_t a = 0; a < n; ++a) {
          Word xa = x;
          xa.push_back(a);
          t.erase(xa);
        }
        t.emplace(x, z);
        changed = true;
        break;
      }
    }
    return t;
  }

  inline CuntzElement quotient_theta(PermMap const& m) {
    return CuntzElement{m.alphabet, reduce_table(m.alphabet, m.table)};
  }

  inline PermMap as_perm_map(CuntzElement const& c) {
    return pm_canonicalize(c.alphabet, {}, WordPairs(c.table.begin(), c.table.end()));
  }

  inline CuntzElement cuntz_product(CuntzElement const& a, CuntzElement const& b) {
    return quotient_theta(pm_compose(as_perm_map(a), as_perm_map(b)));
  }

  struct Congruence {
    bool by_quotient    = false;  // reduced tables agree
    bool by_complements = false;  // both differences from the meet are finite

    bool agree() const { return by_quotient == by_complements; }
  };

  inline Congruence congruence(PermMap const& a, PermMap const& b) {
    check_same_alphabet(a, b);
    Congruence c;
    c.by_quotient   = quotient_theta(a) == quotient_theta(b);
    auto const m    = pm_meet(a, b);
    c.by_complements = pm_subtract(a, m).table.empty() && pm_subtract(b, m).table.empty();
    return c;
  }

  inline bool congruent(PermMap const& a, PermMap const& b) {
    auto c = congruence(a, b);
    if (!c.agree()) {
      throw std::logic_error("congruence tests disagree");
    }
    return c.by_quotient;
  }

  // -- random canonical maps -------------------------------------------------

  namespace detail {
    template <class Rng>
    WordSet random_maximal_code(std::size_t n, std::size_t max_len, Rng& rng) {
      std::bernoulli_distribution split(0.55);
      WordSet                     out;
      auto grow = [&](auto&& self, Word const& w) -> void {
        if (w.size() < max_len && split(rng)) {
          for (std::uint32_t a = 0; a < n; ++a) {
            Word c = w;
            c.push_back(a);
            self(self, c);
          }
        } else {
          out.insert(w);
        }
      };
      grow(grow, Word{});
      return out;
    }

    template <class Rng>
    Word random_word(std::size_t n, std::size_t max_len, Rng& rng) {
      std::uniform_int_distribution<std::size_t>   len(0, max_len);
      std::uniform_int_distribution<std::uint32_t> sym(0, static_cast<std::uint32_t>(n - 1));
      Word                                         w(len(rng));
      for (auto& s : w) {
        s = sym(rng);
      }
      return w;
    }
  }  // namespace detail

  //! A random canonical permissible map whose representation words have
  //! length at most max_len.
  template <class Rng>
  PermMap random_perm_map(std::size_t n, std::size_t max_len, Rng& rng) {
    if (n == 0) {
      fail(error_kind::malformed_input, "alphabet must be non-empty");
    }
    for (;;) {
      auto D = detail::random_maximal_code(n, max_len, rng);
      auto C = detail::random_maximal_code(n, max_len, rng);
      std::vector<Word> dv(D.begin(), D.end()), cv(C.begin(), C.end());
      std::shuffle(dv.begin(), dv.end(), rng);
      std::shuffle(cv.begin(), cv.end(), rng);
      std::uniform_int_distribution<std::size_t> pick(0, std::min(dv.size(), cv.size()));
      std::size_t const                          k = pick(rng);
      WordPairs                                  tab;
      WordSet                                    Y, Z;
      for (std::size_t i = 0; i < k; ++i) {
        tab.emplace_back(dv[i], cv[i]);
        Y.insert(dv[i]);
        Z.insert(cv[i]);
      }
      std::uniform_int_distribution<std::size_t> count(0, 3);
      std::size_t const                          f = count(rng);
      WordPairs                                  fin;
      WordSet                                    used_x, used_v;
      for (std::size_t tries = 0; fin.size() < f && tries < 50; ++tries) {
        auto x = detail::random_word(n, max_len, rng);
        auto v = detail::random_word(n, max_len, rng);
        if (prefix_in(Y, x) || prefix_in(Z, v) || used_x.count(x) || used_v.count(v)) {
          continue;
        }
        used_x.insert(x);
        used_v.insert(v);
        fin.emplace_back(x, v);
      }
      auto m = pm_canonicalize(n, fin, tab);
      if (is_permissible(m)) {
        return m;
      }
    }
  }

}  // namespace boolinv

#endif  // BOOLINV_CUNTZ_TOEPLITZ_HPP_
