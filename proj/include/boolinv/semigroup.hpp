#ifndef BOOLINV_SEMIGROUP_HPP_
#define BOOLINV_SEMIGROUP_HPP_

// Finite inverse semigroups with zero given by Cayley tables, together with
// the order-theoretic primitives (natural partial order, compatibility,
// orthogonality, meets, joins, relative complements) that every other part
// of the library is built from.
//
// Products follow the right-to-left convention of function composition:
// mul(s, t) means "apply t, then s".

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "boolinv/error.hpp"

namespace boolinv {

  //! Strong index type for an element of a Cayley table.
  enum class ElementRef : std::uint32_t {};

  constexpr std::size_t index(ElementRef e) noexcept {
    return static_cast<std::size_t>(e);
  }

  constexpr ElementRef element(std::size_t i) noexcept {
    return static_cast<ElementRef>(static_cast<std::uint32_t>(i));
  }

  //! A map between two tables, stored as the image of each element index.
  using ElementMap = std::vector<ElementRef>;

  // Exhaustive axiom verification is O(n^3); above this size it is refused.
  inline constexpr std::size_t verification_cap = 255;

  class CayleyTable {
   public:
    CayleyTable(std::string                          name,
                std::vector<std::string>             labels,
                std::size_t                          zero,
                std::optional<std::size_t>           identity,
                std::vector<std::vector<std::size_t>> const& rows)
        : _name(std::move(name)),
          _labels(std::move(labels)),
          _zero(zero),
          _identity(identity) {
      std::size_t const n = _labels.size();
      if (n == 0) {
        fail(error_kind::malformed_input, "table has no elements");
      }
      if (rows.size() != n) {
        fail(error_kind::malformed_input,
             "table has " + std::to_string(rows.size()) + " rows but "
                 + std::to_string(n) + " elements");
      }
      _product.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
          fail(error_kind::malformed_input,
               "row " + std::to_string(i) + " has " + std::to_string(rows[i].size())
                   + " entries, expected " + std::to_string(n));
        }
        for (std::size_t v : rows[i]) {
          if (v >= n) {
            fail(error_kind::malformed_input,
                 "entry " + std::to_string(v) + " in row " + std::to_string(i)
                     + " is out of range");
          }
          _product.push_back(static_cast<std::uint32_t>(v));
        }
      }
      check_indices();
    }

    CayleyTable(std::string                name,
                std::vector<std::string>   labels,
                std::size_t                zero,
                std::optional<std::size_t> identity,
                std::vector<std::uint32_t> flat)
        : _name(std::move(name)),
          _labels(std::move(labels)),
          _zero(zero),
          _identity(identity),
          _product(std::move(flat)) {
      std::size_t const n = _labels.size();
      if (n == 0 || _product.size() != n * n) {
        fail(error_kind::malformed_input, "flat table has the wrong size");
      }
      for (auto v : _product) {
        if (v >= n) {
          fail(error_kind::malformed_input, "flat table entry out of range");
        }
      }
      check_indices();
    }

    std::string const& name() const noexcept {
      return _name;
    }

    std::size_t size() const noexcept {
      return _labels.size();
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::string const& label(ElementRef e) const {
      return _labels.at(index(e));
    }

    ElementRef zero() const noexcept {
      return element(_zero);
    }

    std::optional<ElementRef> identity() const noexcept {
      if (_identity) {
        return element(*_identity);
      }
      return std::nullopt;
    }

    ElementRef product(ElementRef a, ElementRef b) const noexcept {
      return static_cast<ElementRef>(_product[index(a) * size() + index(b)]);
    }

    std::vector<std::vector<std::size_t>> rows() const {
      std::vector<std::vector<std::size_t>> out(size(),
                                                std::vector<std::size_t>(size()));
      for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
          out[i][j] = _product[i * size() + j];
        }
      }
      return out;
    }

    friend bool operator==(CayleyTable const&, CayleyTable const&) = default;

   private:
    void check_indices() const {
      if (_zero >= _labels.size()) {
        fail(error_kind::malformed_input, "zero index out of range");
      }
      if (_identity && *_identity >= _labels.size()) {
        fail(error_kind::malformed_input, "identity index out of range");
      }
    }

    std::string                _name;
    std::vector<std::string>   _labels;
    std::size_t                _zero;
    std::optional<std::size_t> _identity;
    std::vector<std::uint32_t> _product;
  };

  struct AxiomViolation {
    std::string             axiom;
    std::vector<ElementRef> witness;
  };

  struct ValidationReport {
    std::vector<AxiomViolation> violations;

    bool ok() const noexcept {
      return violations.empty();
    }

    bool violates(std::string const& axiom) const {
      return std::any_of(violations.begin(),
                         violations.end(),
                         [&](auto const& v) { return v.axiom == axiom; });
    }

    AxiomViolation const* find(std::string const& axiom) const {
      for (auto const& v : violations) {
        if (v.axiom == axiom) {
          return &v;
        }
      }
      return nullptr;
    }
  };

  namespace axiom {
    inline constexpr char const* associativity  = "associativity";
    inline constexpr char const* zero_absorbing = "zero is absorbing";
    inline constexpr char const* identity       = "identity is two-sided";
    inline constexpr char const* has_inverse    = "every element has an inverse";
    inline constexpr char const* unique_inverse = "inverses are unique";
    inline constexpr char const* idempotents_commute = "idempotents commute";
  }  // namespace axiom

  //! Checks every inverse-semigroup-with-zero axiom exhaustively and reports
  //! the first witness for each violated axiom.
  inline ValidationReport verify_inverse_semigroup(CayleyTable const& t) {
    std::size_t const n = t.size();
    if (n > verification_cap) {
      fail(error_kind::size_cap,
           "verification refused for " + std::to_string(n) + " elements (cap "
               + std::to_string(verification_cap) + ")");
    }
    auto             e = [](std::size_t i) { return element(i); };
    ValidationReport report;

    [&] {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          auto ab = t.product(e(a), e(b));
          for (std::size_t c = 0; c < n; ++c) {
            if (t.product(ab, e(c)) != t.product(e(a), t.product(e(b), e(c)))) {
              report.violations.push_back(
                  {axiom::associativity, {e(a), e(b), e(c)}});
              return;
            }
          }
        }
      }
    }();

    auto const z = t.zero();
    for (std::size_t a = 0; a < n; ++a) {
      if (t.product(z, e(a)) != z || t.product(e(a), z) != z) {
        report.violations.push_back({axiom::zero_absorbing, {e(a)}});
        break;
      }
    }

    if (auto one = t.identity()) {
      for (std::size_t a = 0; a < n; ++a) {
        if (t.product(*one, e(a)) != e(a) || t.product(e(a), *one) != e(a)) {
          report.violations.push_back({axiom::identity, {e(a)}});
          break;
        }
      }
    }

    bool missing = false, repeated = false;
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<ElementRef> inverses;
      for (std::size_t y = 0; y < n; ++y) {
        auto xy = t.product(e(x), e(y));
        auto yx = t.product(e(y), e(x));
        if (t.product(xy, e(x)) == e(x) && t.product(yx, e(y)) == e(y)) {
          inverses.push_back(e(y));
        }
      }
      if (inverses.empty() && !missing) {
        report.violations.push_back({axiom::has_inverse, {e(x)}});
        missing = true;
      } else if (inverses.size() > 1 && !repeated) {
        report.violations.push_back(
            {axiom::unique_inverse, {e(x), inverses[0], inverses[1]}});
        repeated = true;
      }
    }

    [&] {
      for (std::size_t a = 0; a < n; ++a) {
        if (t.product(e(a), e(a)) != e(a)) {
          continue;
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (t.product(e(b), e(b)) != e(b)) {
            continue;
          }
          if (t.product(e(a), e(b)) != t.product(e(b), e(a))) {
            report.violations.push_back(
                {axiom::idempotents_commute, {e(a), e(b)}});
            return;
          }
        }
      }
    }();
    return report;
  }

  struct RelationReport {
    bool leq        = false;
    bool geq        = false;
    bool compatible = false;
    bool orthogonal = false;

    friend bool operator==(RelationReport const&, RelationReport const&)
        = default;
  };

  //! A verified finite inverse semigroup with zero. Inverses, idempotents and
  //! the natural partial order are derived from the table once and cached.
  class InverseSemigroup {
   public:
    //! Verifies every axiom; throws NotInverseSemigroup naming the first
    //! violated axiom.
    explicit InverseSemigroup(CayleyTable table) : _table(std::move(table)) {
      auto report = verify_inverse_semigroup(_table);
      if (!report.ok()) {
        auto const& v = report.violations.front();
        std::string msg = "table '" + _table.name() + "' violates '" + v.axiom
                          + "', witness (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
          msg += (i ? ", " : "") + _table.label(v.witness[i]);
        }
        fail(error_kind::not_inverse_semigroup, msg + ")");
      }
      derive();
    }

    //! For tables produced by this library's own constructions, which are
    //! inverse semigroups by construction; skips the O(n^3) axiom check.
    static InverseSemigroup trusted(CayleyTable table) {
      return InverseSemigroup(std::move(table), trusted_tag{});
    }

    CayleyTable const& table() const noexcept {
      return _table;
    }

    std::size_t size() const noexcept {
      return _table.size();
    }

    ElementRef zero() const noexcept {
      return _table.zero();
    }

    std::optional<ElementRef> identity() const noexcept {
      return _table.identity();
    }

    std::string const& label(ElementRef e) const {
      return _table.label(e);
    }

    ElementRef mul(ElementRef a, ElementRef b) const noexcept {
      return _table.product(a, b);
    }

    ElementRef inv(ElementRef a) const noexcept {
      return _inverse[index(a)];
    }

    //! d(a) = a^-1 a
    ElementRef dom(ElementRef a) const noexcept {
      return mul(inv(a), a);
    }

    //! r(a) = a a^-1
    ElementRef ran(ElementRef a) const noexcept {
      return mul(a, inv(a));
    }

    bool is_zero(ElementRef a) const noexcept {
      return a == zero();
    }

    bool is_idempotent(ElementRef a) const noexcept {
      return _idempotent[index(a)];
    }

    //! Natural partial order: s <= t iff s = t s^-1 s.
    bool leq(ElementRef s, ElementRef t) const noexcept {
      return _leq[index(s) * size() + index(t)];
    }

    bool compatible(ElementRef s, ElementRef t) const noexcept {
      return is_idempotent(mul(inv(s), t)) && is_idempotent(mul(s, inv(t)));
    }

    bool orthogonal(ElementRef s, ElementRef t) const noexcept {
      return is_zero(mul(inv(s), t)) && is_zero(mul(s, inv(t)));
    }

    //! Number of elements below a; used to pick least/greatest candidates.
    std::size_t down_size(ElementRef a) const noexcept {
      return _down_size[index(a)];
    }

    std::vector<ElementRef> elements() const {
      std::vector<ElementRef> out(size());
      for (std::size_t i = 0; i < size(); ++i) {
        out[i] = element(i);
      }
      return out;
    }

    std::vector<ElementRef> nonzero() const {
      std::vector<ElementRef> out;
      for (std::size_t i = 0; i < size(); ++i) {
        if (element(i) != zero()) {
          out.push_back(element(i));
        }
      }
      return out;
    }

    std::vector<ElementRef> idempotents() const {
      std::vector<ElementRef> out;
      for (std::size_t i = 0; i < size(); ++i) {
        if (_idempotent[i]) {
          out.push_back(element(i));
        }
      }
      return out;
    }

    //! All x <= a, in index order.
    std::vector<ElementRef> below(ElementRef a) const {
      std::vector<ElementRef> out;
      for (std::size_t i = 0; i < size(); ++i) {
        if (leq(element(i), a)) {
          out.push_back(element(i));
        }
      }
      return out;
    }

   private:
    struct trusted_tag {};

    InverseSemigroup(CayleyTable table, trusted_tag) : _table(std::move(table)) {
      derive();
    }

    void derive() {
      std::size_t const n = size();
      _inverse.assign(n, zero());
      _idempotent.assign(n, false);
      for (std::size_t x = 0; x < n; ++x) {
        auto ex    = element(x);
        bool found = false;
        for (std::size_t y = 0; y < n && !found; ++y) {
          auto ey = element(y);
          if (mul(mul(ex, ey), ex) == ex && mul(mul(ey, ex), ey) == ey) {
            _inverse[x] = ey;
            found       = true;
          }
        }
        if (!found) {
          fail(error_kind::not_inverse_semigroup,
               "element " + _table.label(ex) + " has no inverse");
        }
        _idempotent[x] = mul(ex, ex) == ex;
      }
      _leq.assign(n * n, false);
      _down_size.assign(n, 0);
      for (std::size_t s = 0; s < n; ++s) {
        auto es = element(s);
        auto ds = dom(es);
        for (std::size_t t = 0; t < n; ++t) {
          if (mul(element(t), ds) == es) {
            _leq[s * n + t] = true;
            ++_down_size[t];
          }
        }
      }
    }

    CayleyTable              _table;
    std::vector<ElementRef>  _inverse;
    std::vector<bool>        _idempotent;
    std::vector<bool>        _leq;
    std::vector<std::size_t> _down_size;
  };

  inline RelationReport relate(InverseSemigroup const& S,
                               ElementRef              s,
                               ElementRef              t) {
    return {S.leq(s, t), S.leq(t, s), S.compatible(s, t), S.orthogonal(s, t)};
  }

  //! s ^ t = s t^-1 t for compatible s, t.
  inline ElementRef compatible_meet(InverseSemigroup const& S,
                                    ElementRef              s,
                                    ElementRef              t) {
    if (!S.compatible(s, t)) {
      fail(error_kind::not_compatible,
           S.label(s) + " and " + S.label(t) + " are not compatible");
    }
    return S.mul(s, S.mul(S.inv(t), t));
  }

  namespace detail {
    // The least element of a candidate set, if one is below all the others.
    inline std::optional<ElementRef>
    least_of(InverseSemigroup const& S, std::vector<ElementRef> const& cands) {
      if (cands.empty()) {
        return std::nullopt;
      }
      auto best = *std::min_element(
          cands.begin(), cands.end(), [&](ElementRef a, ElementRef b) {
            return S.down_size(a) < S.down_size(b);
          });
      for (auto c : cands) {
        if (!S.leq(best, c)) {
          return std::nullopt;
        }
      }
      return best;
    }

    inline std::optional<ElementRef>
    greatest_of(InverseSemigroup const& S, std::vector<ElementRef> const& cands) {
      if (cands.empty()) {
        return std::nullopt;
      }
      auto best = *std::max_element(
          cands.begin(), cands.end(), [&](ElementRef a, ElementRef b) {
            return S.down_size(a) < S.down_size(b);
          });
      for (auto c : cands) {
        if (!S.leq(c, best)) {
          return std::nullopt;
        }
      }
      return best;
    }
  }  // namespace detail

  //! Greatest common lower bound by exhaustive scan.
  inline std::optional<ElementRef> brute_force_meet(InverseSemigroup const& S,
                                                    ElementRef              s,
                                                    ElementRef              t) {
    std::vector<ElementRef> lower;
    for (auto x : S.elements()) {
      if (S.leq(x, s) && S.leq(x, t)) {
        lower.push_back(x);
      }
    }
    return detail::greatest_of(S, lower);
  }

  //! Least upper bound of a set by exhaustive scan; the empty set joins to
  //! zero.
  inline std::optional<ElementRef>
  brute_force_join(InverseSemigroup const& S, std::span<ElementRef const> elems) {
    std::vector<ElementRef> upper;
    for (auto x : S.elements()) {
      if (std::all_of(elems.begin(), elems.end(), [&](ElementRef e) {
            return S.leq(e, x);
          })) {
        upper.push_back(x);
      }
    }
    return detail::least_of(S, upper);
  }

  inline std::optional<ElementRef> brute_force_join(InverseSemigroup const& S,
                                                    ElementRef              a,
                                                    ElementRef              b) {
    ElementRef const pair[] = {a, b};
    return brute_force_join(S, pair);
  }

  //! Maximal elements of a set under the natural partial order, in index
  //! order.
  inline std::vector<ElementRef> maximal_elements(InverseSemigroup const& S,
                                                  std::span<ElementRef const> xs) {
    std::vector<ElementRef> out;
    for (auto x : xs) {
      bool dominated = std::any_of(xs.begin(), xs.end(), [&](ElementRef y) {
        return y != x && S.leq(x, y);
      });
      if (!dominated) {
        out.push_back(x);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  //! Elements strictly below a that are maximal with that property.
  inline std::vector<ElementRef> maximal_strictly_below(InverseSemigroup const& S,
                                                        ElementRef a) {
    std::vector<ElementRef> strict;
    for (auto x : S.below(a)) {
      if (x != a) {
        strict.push_back(x);
      }
    }
    return maximal_elements(S, strict);
  }

  struct Classification {
    bool is_meet_semigroup = false;
    bool is_distributive   = false;
    bool is_boolean        = false;
    bool is_monoid         = false;
    // Orthogonal joins exist and distribute, and E(S) is a Boolean algebra.
    bool orthogonal_join_form = false;

    bool definition_agrees() const noexcept {
      return is_boolean == orthogonal_join_form;
    }
  };

  namespace detail {
    // Join of every compatible pair (nullopt for incompatible or missing).
    inline std::vector<std::optional<ElementRef>>
    compatible_join_table(InverseSemigroup const& S) {
      std::size_t const                      n = S.size();
      std::vector<std::optional<ElementRef>> joins(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          auto a = element(i), b = element(j);
          if (S.compatible(a, b)) {
            joins[i * n + j] = joins[j * n + i] = brute_force_join(S, a, b);
          }
        }
      }
      return joins;
    }

    inline bool idempotents_form_boolean_algebra(
        InverseSemigroup const&                       S,
        std::vector<std::optional<ElementRef>> const& joins) {
      auto const        E = S.idempotents();
      std::size_t const n = S.size();
      auto join = [&](ElementRef a, ElementRef b) { return joins[index(a) * n + index(b)]; };
      for (auto e : E) {
        for (auto f : E) {
          if (!join(e, f)) {
            return false;
          }
          for (auto g : E) {
            auto fg = join(f, g);
            auto l  = join(S.mul(e, f), S.mul(e, g));
            if (!l || S.mul(e, *fg) != *l) {
              return false;
            }
          }
        }
      }
      for (auto e : E) {
        for (auto f : E) {
          if (!S.leq(f, e)) {
            continue;
          }
          bool complemented = std::any_of(E.begin(), E.end(), [&](ElementRef g) {
            return S.leq(g, e) && S.is_zero(S.mul(g, f)) && join(g, f) == e;
          });
          if (!complemented) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  inline Classification classify(InverseSemigroup const& S) {
    std::size_t const n = S.size();
    if (n > verification_cap) {
      fail(error_kind::size_cap,
           "classification refused for " + std::to_string(n) + " elements");
    }
    Classification c;
    auto const     all = S.elements();

    c.is_monoid = std::any_of(all.begin(), all.end(), [&](ElementRef u) {
      return std::all_of(all.begin(), all.end(), [&](ElementRef x) {
        return S.mul(u, x) == x && S.mul(x, u) == x;
      });
    });

    c.is_meet_semigroup = true;
    for (std::size_t i = 0; i < n && c.is_meet_semigroup; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!brute_force_meet(S, element(i), element(j))) {
          c.is_meet_semigroup = false;
          break;
        }
      }
    }

    auto const joins = detail::compatible_join_table(S);
    auto join = [&](ElementRef a, ElementRef b) { return joins[index(a) * n + index(b)]; };

    // Distributivity over the joins of a given family of pairs.
    auto distributes = [&](auto&& in_family) {
      for (auto b : all) {
        for (auto c2 : all) {
          if (!in_family(b, c2)) {
            continue;
          }
          auto j = join(b, c2);
          if (!j) {
            return false;
          }
          for (auto a : all) {
            auto l = join(S.mul(a, b), S.mul(a, c2));
            auto r = join(S.mul(b, a), S.mul(c2, a));
            if (!l || !r || S.mul(a, *j) != *l || S.mul(*j, a) != *r) {
              return false;
            }
          }
        }
      }
      return true;
    };

    c.is_distributive = distributes(
        [&](ElementRef a, ElementRef b) { return S.compatible(a, b); });

    bool const e_boolean = detail::idempotents_form_boolean_algebra(S, joins);
    c.is_boolean         = c.is_distributive && e_boolean;
    c.orthogonal_join_form
        = e_boolean && distributes([&](ElementRef a, ElementRef b) {
            return S.orthogonal(a, b);
          });
    return c;
  }

  //! The greatest idempotent below e orthogonal to f, provided it really is
  //! the complement (its join with f is e). Throws NotBoolean otherwise.
  inline ElementRef idempotent_complement(InverseSemigroup const& S,
                                          ElementRef              e,
                                          ElementRef              f) {
    std::vector<ElementRef> cands;
    for (auto g : S.below(e)) {
      if (S.is_zero(S.mul(g, f))) {
        cands.push_back(g);
      }
    }
    auto g = detail::greatest_of(S, cands);
    if (!g || brute_force_join(S, *g, f) != e) {
      fail(error_kind::not_boolean,
           S.label(f) + " has no complement below " + S.label(e));
    }
    return *g;
  }

  //! a \ b = a (d(a) \ d(b)) for b <= a.
  inline ElementRef relative_complement(InverseSemigroup const& S,
                                        ElementRef              a,
                                        ElementRef              b) {
    if (!S.leq(b, a)) {
      fail(error_kind::not_below, S.label(b) + " is not below " + S.label(a));
    }
    return S.mul(a, idempotent_complement(S, S.dom(a), S.dom(b)));
  }

  //! Tabulates a subset closed under multiplication (and containing zero) as
  //! its own Cayley table; element i of the result is subset[i].
  inline CayleyTable tabulate_subset(InverseSemigroup const&     S,
                                     std::span<ElementRef const> subset,
                                     std::string                 name) {
    std::vector<std::size_t> pos(S.size(), SIZE_MAX);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      pos[index(subset[i])] = i;
    }
    if (pos[index(S.zero())] == SIZE_MAX) {
      fail(error_kind::malformed_input, "subset does not contain zero");
    }
    std::vector<std::string>   labels;
    std::vector<std::uint32_t> flat;
    for (auto a : subset) {
      labels.push_back(S.label(a));
      for (auto b : subset) {
        auto p = pos[index(S.mul(a, b))];
        if (p == SIZE_MAX) {
          fail(error_kind::malformed_input,
               "subset not closed: " + S.label(a) + " * " + S.label(b));
        }
        flat.push_back(static_cast<std::uint32_t>(p));
      }
    }
    std::optional<std::size_t> one;
    if (auto u = S.identity(); u && pos[index(*u)] != SIZE_MAX) {
      one = pos[index(*u)];
    }
    return CayleyTable(std::move(name),
                       std::move(labels),
                       pos[index(S.zero())],
                       one,
                       std::move(flat));
  }

  //! Zero-preserving multiplicative map check.
  inline bool is_homomorphism(InverseSemigroup const& S,
                              InverseSemigroup const& T,
                              ElementMap const&       f) {
    if (f.size() != S.size() || f[index(S.zero())] != T.zero()) {
      return false;
    }
    for (auto a : S.elements()) {
      for (auto b : S.elements()) {
        if (f[index(S.mul(a, b))] != T.mul(f[index(a)], f[index(b)])) {
          return false;
        }
      }
    }
    return true;
  }

  //! A homomorphism that also maps every existing binary compatible join to
  //! the join of the images.
  inline bool is_morphism(InverseSemigroup const& S,
                          InverseSemigroup const& T,
                          ElementMap const&       f) {
    if (!is_homomorphism(S, T, f)) {
      return false;
    }
    for (auto a : S.elements()) {
      for (auto b : S.elements()) {
        if (index(b) < index(a) || !S.compatible(a, b)) {
          continue;
        }
        if (auto j = brute_force_join(S, a, b)) {
          if (brute_force_join(T, f[index(a)], f[index(b)]) != f[index(*j)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace boolinv

#endif  // BOOLINV_SEMIGROUP_HPP_
