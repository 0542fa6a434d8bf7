#ifndef BOOLINV_BOOLEANIZATION_HPP_
#define BOOLINV_BOOLEANIZATION_HPP_

// Booleanization of finite inverse semigroups as the inverse monoid of all
// partial bisections of a finite groupoid of filters. Two routes are
// provided: join-prime elements of a distributive table (applied to D(S) for
// arbitrary S), and nonzero elements of S itself (every proper filter of a
// finite S is principal). They are checked to agree.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "boolinv/completion.hpp"
#include "boolinv/error.hpp"
#include "boolinv/semigroup.hpp"

namespace boolinv {

  inline constexpr std::size_t groupoid_arrow_cap = 24;
  inline constexpr std::size_t bisection_cap      = 4096;

  //! A finite groupoid whose arrows are elements of a base table, with
  //! d(p) = p^-1 p and r(p) = p p^-1 as source and target.
  struct FilterGroupoid {
    std::vector<ElementRef>   arrows;   // carrier element of each arrow
    std::vector<std::size_t>  source;   // arrow index of d(p)
    std::vector<std::size_t>  target;   // arrow index of r(p)
    std::vector<std::size_t>  inverse;  // arrow index of p^-1
    std::vector<std::size_t>  objects;  // arrows that are identities
    std::vector<std::int64_t> arrow_of; // base element -> arrow index or -1
    std::vector<std::int64_t> product;  // p*q when source(p) == target(q)

    std::size_t size() const noexcept {
      return arrows.size();
    }

    std::optional<std::size_t> compose(std::size_t p, std::size_t q) const {
      auto r = product[p * size() + q];
      if (r < 0) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(r);
    }

    bool is_object(std::size_t p) const {
      return source[p] == p;
    }
  };

  //! Builds the groupoid on the given carrier elements; every d(p), r(p),
  //! p^-1 and composable product must again be a carrier.
  inline FilterGroupoid groupoid_on(InverseSemigroup const&        S,
                                    std::vector<ElementRef> const& carriers) {
    FilterGroupoid G;
    G.arrows = carriers;
    G.arrow_of.assign(S.size(), -1);
    for (std::size_t i = 0; i < carriers.size(); ++i) {
      G.arrow_of[index(carriers[i])] = static_cast<std::int64_t>(i);
    }
    auto arrow = [&](ElementRef x, char const* what) {
      auto a = G.arrow_of[index(x)];
      if (a < 0) {
        fail(error_kind::not_distributive,
             std::string(what) + " of a filter is not a filter: " + S.label(x));
      }
      return static_cast<std::size_t>(a);
    };
    std::size_t const n = carriers.size();
    for (std::size_t i = 0; i < n; ++i) {
      G.source.push_back(arrow(S.dom(carriers[i]), "domain"));
      G.target.push_back(arrow(S.ran(carriers[i]), "range"));
      G.inverse.push_back(arrow(S.inv(carriers[i]), "inverse"));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (G.source[i] == i) {
        G.objects.push_back(i);
      }
    }
    G.product.assign(n * n, -1);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (G.source[p] == G.target[q]) {
          G.product[p * n + q] = static_cast<std::int64_t>(
              arrow(S.mul(carriers[p], carriers[q]), "product"));
        }
      }
    }
    return G;
  }

  //! Nonzero a such that a <= b v c forces a <= b or a <= c.
  inline std::vector<ElementRef> join_primes(InverseSemigroup const& D) {
    auto const joins = detail::compatible_join_table(D);
    auto const all   = D.elements();
    std::vector<ElementRef> out;
    for (auto a : D.nonzero()) {
      bool prime = true;
      for (auto b : all) {
        for (auto c : all) {
          if (!D.compatible(b, c)) {
            continue;
          }
          auto j = joins[index(b) * D.size() + index(c)];
          if (!j) {
            fail(error_kind::not_distributive,
                 "no join of " + D.label(b) + " and " + D.label(c));
          }
          if (D.leq(a, *j) && !D.leq(a, b) && !D.leq(a, c)) {
            prime = false;
            break;
          }
        }
        if (!prime) {
          break;
        }
      }
      if (prime) {
        out.push_back(a);
      }
    }
    return out;
  }

  inline FilterGroupoid prime_groupoid(InverseSemigroup const& D) {
    return groupoid_on(D, join_primes(D));
  }

  //! Arrows are the nonzero elements (principal proper filters), objects the
  //! nonzero idempotents; x*y is defined when d(x) = r(y).
  inline FilterGroupoid proper_filter_groupoid(InverseSemigroup const& S) {
    return groupoid_on(S, S.nonzero());
  }

  //! A set of arrows with pairwise distinct sources and targets, stored as
  //! a bit mask over arrow indices.
  struct Bisection {
    std::uint32_t mask = 0;

    bool empty() const noexcept {
      return mask == 0;
    }

    bool contains(std::size_t p) const noexcept {
      return mask >> p & 1;
    }

    std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(mask));
    }

    std::vector<std::size_t> arrows() const {
      std::vector<std::size_t> out;
      for (std::size_t p = 0; p < 32; ++p) {
        if (contains(p)) {
          out.push_back(p);
        }
      }
      return out;
    }

    static Bisection single(std::size_t p) {
      return Bisection{std::uint32_t{1} << p};
    }

    friend bool operator==(Bisection, Bisection) = default;
  };

  // Order used to index bisection tables: by size, then arrow list.
  inline bool bisection_less(Bisection a, Bisection b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a.arrows() < b.arrows();
  }

  inline void check_arrow_cap(FilterGroupoid const& G) {
    if (G.size() > groupoid_arrow_cap) {
      fail(error_kind::size_cap,
           "groupoid has " + std::to_string(G.size()) + " arrows (cap "
               + std::to_string(groupoid_arrow_cap) + ")");
    }
  }

  inline bool is_bisection(FilterGroupoid const& G, Bisection X) {
    std::set<std::size_t> sources, targets;
    for (auto p : X.arrows()) {
      if (!sources.insert(G.source[p]).second || !targets.insert(G.target[p]).second) {
        return false;
      }
    }
    return true;
  }

  inline Bisection bisection_product(FilterGroupoid const& G, Bisection X, Bisection Y) {
    Bisection out;
    for (auto p : X.arrows()) {
      for (auto q : Y.arrows()) {
        if (auto r = G.compose(p, q)) {
          out.mask |= Bisection::single(*r).mask;
        }
      }
    }
    return out;
  }

  inline Bisection bisection_inverse(FilterGroupoid const& G, Bisection X) {
    Bisection out;
    for (auto p : X.arrows()) {
      out.mask |= Bisection::single(G.inverse[p]).mask;
    }
    return out;
  }

  enum class bisection_op { join, meet, complement_within, subtract };

  //! join: union (must remain a bisection); meet: intersection; subtract:
  //! X minus Y; complement_within: Y minus X for X contained in Y.
  inline Bisection bisection_boolean(FilterGroupoid const& G,
                                     bisection_op          op,
                                     Bisection             X,
                                     Bisection             Y) {
    switch (op) {
      case bisection_op::join: {
        Bisection u{X.mask | Y.mask};
        if (!is_bisection(G, u)) {
          fail(error_kind::not_a_bisection, "union is not a bisection");
        }
        return u;
      }
      case bisection_op::meet: return Bisection{X.mask & Y.mask};
      case bisection_op::subtract: return Bisection{X.mask & ~Y.mask};
      case bisection_op::complement_within:
        if ((X.mask & ~Y.mask) != 0) {
          fail(error_kind::not_below, "bisection is not contained in the other");
        }
        return Bisection{Y.mask & ~X.mask};
    }
    return {};
  }

  //! V_{a;b} = {p : p <= a, not p <= b}; b must be below a.
  inline Bisection v_set(InverseSemigroup const&   D,
                         FilterGroupoid const&     G,
                         ElementRef                a,
                         std::optional<ElementRef> b = std::nullopt) {
    if (b && !D.leq(*b, a)) {
      fail(error_kind::not_below, D.label(*b) + " is not below " + D.label(a));
    }
    Bisection out;
    for (std::size_t p = 0; p < G.size(); ++p) {
      if (D.leq(G.arrows[p], a) && !(b && D.leq(G.arrows[p], *b))) {
        out.mask |= Bisection::single(p).mask;
      }
    }
    return out;
  }

  //! U_{a; a1..am} = {x : x <= a, x not below any ai} over the proper-filter
  //! groupoid.
  inline Bisection u_set(InverseSemigroup const&        S,
                         FilterGroupoid const&          G,
                         ElementRef                     a,
                         std::vector<ElementRef> const& omit = {}) {
    Bisection out;
    for (std::size_t p = 0; p < G.size(); ++p) {
      auto x = G.arrows[p];
      if (S.leq(x, a) && std::none_of(omit.begin(), omit.end(), [&](ElementRef o) {
            return S.leq(x, o);
          })) {
        out.mask |= Bisection::single(p).mask;
      }
    }
    return out;
  }

  //! Every partial bisection of G, in bisection order (empty first).
  inline std::vector<Bisection> all_bisections(FilterGroupoid const& G,
                                               std::size_t cap = bisection_cap) {
    check_arrow_cap(G);
    std::vector<Bisection> out;
    auto recurse = [&](auto&& self, std::size_t p, Bisection cur,
                       std::uint32_t used_src, std::uint32_t used_tgt) -> void {
      if (p == G.size()) {
        if (out.size() >= cap) {
          fail(error_kind::size_cap,
               "more than " + std::to_string(cap) + " partial bisections");
        }
        out.push_back(cur);
        return;
      }
      self(self, p + 1, cur, used_src, used_tgt);
      auto s = std::uint32_t{1} << G.source[p];
      auto t = std::uint32_t{1} << G.target[p];
      if (!(used_src & s) && !(used_tgt & t)) {
        self(self, p + 1, Bisection{cur.mask | (std::uint32_t{1} << p)},
             used_src | s, used_tgt | t);
      }
    };
    recurse(recurse, 0, Bisection{}, 0, 0);
    std::sort(out.begin(), out.end(), bisection_less);
    return out;
  }

  //! All partial bisections of a groupoid tabulated as an inverse monoid.
  struct BisectionTable {
    FilterGroupoid                     groupoid;
    std::vector<Bisection>             bisections;  // element i of table
    std::map<std::uint32_t, std::size_t> position;
    InverseSemigroup                   table;

    ElementRef find(Bisection X) const {
      auto it = position.find(X.mask);
      if (it == position.end()) {
        fail(error_kind::not_a_bisection, "not a partial bisection");
      }
      return element(it->second);
    }

    Bisection const& at(ElementRef x) const {
      return bisections.at(index(x));
    }
  };

  inline BisectionTable tabulate_bisections(FilterGroupoid           G,
                                            std::vector<std::string> arrow_labels,
                                            std::string              name) {
    auto                                 bs = all_bisections(G);
    std::map<std::uint32_t, std::size_t> position;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      position.emplace(bs[i].mask, i);
    }
    std::size_t const          m = bs.size();
    std::vector<std::uint32_t> flat(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        flat[i * m + j] = static_cast<std::uint32_t>(
            position.at(bisection_product(G, bs[i], bs[j]).mask));
      }
    }
    std::vector<std::string> labels;
    for (auto X : bs) {
      std::string l = "[";
      auto        as = X.arrows();
      for (std::size_t k = 0; k < as.size(); ++k) {
        l += (k ? " ; " : "") + arrow_labels[as[k]];
      }
      labels.push_back(l + "]");
    }
    Bisection objects;
    for (auto o : G.objects) {
      objects.mask |= Bisection::single(o).mask;
    }
    std::size_t const one = position.at(objects.mask);
    CayleyTable       t(std::move(name), std::move(labels), 0, one, std::move(flat));
    return BisectionTable{std::move(G),
                          std::move(bs),
                          std::move(position),
                          InverseSemigroup::trusted(std::move(t))};
  }

  namespace detail {
    inline std::vector<std::string> arrow_labels(InverseSemigroup const& S,
                                                 FilterGroupoid const&   G) {
      std::vector<std::string> out;
      for (auto a : G.arrows) {
        out.push_back(S.label(a));
      }
      return out;
    }

    // Join of the maximal elements strictly below a (exists in a
    // distributive table since they are pairwise compatible).
    inline ElementRef join_below(InverseSemigroup const& S, ElementRef a) {
      auto lower = maximal_strictly_below(S, a);
      auto j     = brute_force_join(S, lower);
      if (!j) {
        fail(error_kind::join_missing,
             "no join of the elements strictly below " + S.label(a));
      }
      return *j;
    }
  }  // namespace detail

  struct Booleanization {
    BisectionTable B;
    ElementMap     beta;  // a -> V_a
    // Every singleton {p} equals V_{p; join below p}, so the compatible-union
    // closure of the V-sets is the whole bisection set.
    bool v_closure_verified = false;
  };

  //! Booleanization of a distributive table by its prime groupoid.
  inline Booleanization booleanize_distributive(InverseSemigroup const& D) {
    if (D.size() <= verification_cap && !classify(D).is_distributive) {
      fail(error_kind::not_distributive, D.table().name() + " is not distributive");
    }
    auto G = prime_groupoid(D);
    check_arrow_cap(G);
    auto labels = detail::arrow_labels(D, G);
    auto B      = tabulate_bisections(std::move(G), std::move(labels),
                                 "B(" + D.table().name() + ")");
    Booleanization out{std::move(B), {}, true};
    auto const&    Gr = out.B.groupoid;
    for (auto a : D.elements()) {
      out.beta.push_back(out.B.find(v_set(D, Gr, a)));
    }
    for (std::size_t p = 0; p < Gr.size(); ++p) {
      auto below = detail::join_below(D, Gr.arrows[p]);
      if (v_set(D, Gr, Gr.arrows[p], below) != Bisection::single(p)) {
        out.v_closure_verified = false;
      }
    }
    if (!out.v_closure_verified) {
      fail(error_kind::not_distributive, "singleton bisection is not a V-set");
    }
    return out;
  }

  struct FullBooleanization {
    Completion     completion;
    Booleanization dist;
    ElementMap     beta;  // delta followed by the distributive embedding

    InverseSemigroup const& btable() const noexcept {
      return dist.B.table;
    }
  };

  //! Booleanization of an arbitrary finite inverse semigroup via D(S).
  inline FullBooleanization booleanize(InverseSemigroup const& S) {
    auto       D    = completion_table(S);
    auto       dist = booleanize_distributive(D.dtable);
    ElementMap beta;
    for (auto s : S.elements()) {
      beta.push_back(dist.beta[index(D.delta[index(s)])]);
    }
    return FullBooleanization{std::move(D), std::move(dist), std::move(beta)};
  }

  //! Checks that arrow_map is a groupoid isomorphism G -> H.
  inline bool groupoid_isomorphic(FilterGroupoid const&           G,
                                  FilterGroupoid const&           H,
                                  std::vector<std::size_t> const& arrow_map) {
    if (G.size() != H.size() || arrow_map.size() != G.size()) {
      return false;
    }
    std::set<std::size_t> image(arrow_map.begin(), arrow_map.end());
    if (image.size() != G.size() || *image.rbegin() >= H.size()) {
      return false;
    }
    for (std::size_t p = 0; p < G.size(); ++p) {
      if (arrow_map[G.source[p]] != H.source[arrow_map[p]]
          || arrow_map[G.target[p]] != H.target[arrow_map[p]]
          || arrow_map[G.inverse[p]] != H.inverse[arrow_map[p]]) {
        return false;
      }
      for (std::size_t q = 0; q < G.size(); ++q) {
        auto pq = G.compose(p, q);
        auto hq = H.compose(arrow_map[p], arrow_map[q]);
        if (pq.has_value() != hq.has_value() || (pq && arrow_map[*pq] != *hq)) {
          return false;
        }
      }
    }
    return true;
  }

  //! The proper-filter groupoid of S mapped into the prime groupoid of D(S)
  //! by x -> x↓. Empty when some x↓ is not prime.
  inline std::vector<std::size_t> principal_arrow_map(FilterGroupoid const&     L,
                                                      FullBooleanization const& FB) {
    std::vector<std::size_t> out;
    auto const&              P = FB.dist.B.groupoid;
    for (auto x : L.arrows) {
      auto a = P.arrow_of[index(FB.completion.delta[index(x)])];
      if (a < 0) {
        return {};
      }
      out.push_back(static_cast<std::size_t>(a));
    }
    return out;
  }

  struct DirectBooleanization {
    BisectionTable           B;
    ElementMap               upsilon;     // a -> U_a
    std::vector<std::size_t> arrow_map;   // x -> x↓ in the prime groupoid
    bool                     groupoid_iso = false;
    ElementMap               iso;         // direct btable -> booleanize btable
    bool                     certified = false;
  };

  //! Booleanization through the proper-filter groupoid, together with a
  //! certified isomorphism onto booleanize(S).
  inline DirectBooleanization direct_booleanize(InverseSemigroup const&   S,
                                                FullBooleanization const& FB) {
    auto G = proper_filter_groupoid(S);
    check_arrow_cap(G);
    auto labels = detail::arrow_labels(S, G);
    DirectBooleanization out{tabulate_bisections(std::move(G), std::move(labels),
                                                 "U(" + S.table().name() + ")"),
                             {}, {}, false, {}, false};
    auto const& L = out.B.groupoid;
    for (auto a : S.elements()) {
      out.upsilon.push_back(out.B.find(u_set(S, L, a)));
    }
    out.arrow_map    = principal_arrow_map(L, FB);
    out.groupoid_iso = !out.arrow_map.empty() || L.size() == 0;
    out.groupoid_iso = out.groupoid_iso
                       && groupoid_isomorphic(L, FB.dist.B.groupoid, out.arrow_map);
    if (!out.groupoid_iso) {
      return out;
    }
    auto const& T = FB.btable();
    for (auto const& X : out.B.bisections) {
      Bisection Y;
      for (auto p : X.arrows()) {
        Y.mask |= Bisection::single(out.arrow_map[p]).mask;
      }
      out.iso.push_back(FB.dist.B.find(Y));
    }
    std::set<ElementRef> image(out.iso.begin(), out.iso.end());
    bool ok = image.size() == T.size() && out.B.table.size() == T.size()
              && is_homomorphism(out.B.table, T, out.iso);
    for (auto a : S.elements()) {
      ok = ok && out.iso[index(out.upsilon[index(a)])] == FB.beta[index(a)];
    }
    out.certified = ok;
    return out;
  }

  inline DirectBooleanization direct_booleanize(InverseSemigroup const& S) {
    return direct_booleanize(S, booleanize(S));
  }

  struct Factorization {
    ElementMap gamma;  // btable -> T
    bool       is_morphism   = false;
    bool       extends_theta = false;
    // Certificate that any morphism extending theta equals gamma:
    // uniqueness on D(S), every atom is V_p \ V_{p-} in btable, and every
    // element is the orthogonal join of its atoms.
    bool unique = false;
  };

  //! The morphism gamma: B(S) -> T with beta followed by gamma equal to
  //! theta, for a homomorphism theta into a Boolean table T.
  inline Factorization factor_through(InverseSemigroup const&   S,
                                      FullBooleanization const& FB,
                                      ElementMap const&         theta,
                                      InverseSemigroup const&   T) {
    if (!classify(T).is_boolean) {
      fail(error_kind::not_boolean, T.table().name() + " is not Boolean");
    }
    auto const& D      = FB.completion.dtable;
    auto        lifted = completion_factorize(S, FB.completion, T, theta);
    auto const& G      = FB.dist.B.groupoid;
    auto const& Bt     = FB.btable();

    std::vector<ElementRef> atom_image(G.size());
    bool atoms_are_differences = true;
    for (std::size_t p = 0; p < G.size(); ++p) {
      auto top    = G.arrows[p];
      auto below  = detail::join_below(D, top);
      atom_image[p] = relative_complement(
          T, lifted.gamma[index(top)], lifted.gamma[index(below)]);
      auto atom = FB.dist.B.find(Bisection::single(p));
      atoms_are_differences
          = atoms_are_differences
            && relative_complement(Bt,
                                   FB.dist.beta[index(top)],
                                   FB.dist.beta[index(below)])
                   == atom;
    }

    Factorization out;
    bool joins_of_atoms = true;
    for (auto const& X : FB.dist.B.bisections) {
      std::vector<ElementRef> images, atoms;
      for (auto p : X.arrows()) {
        images.push_back(atom_image[p]);
        atoms.push_back(FB.dist.B.find(Bisection::single(p)));
      }
      auto j = brute_force_join(T, images);
      if (!j) {
        fail(error_kind::join_missing, "atom images have no join in the target");
      }
      out.gamma.push_back(*j);
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t k = i + 1; k < atoms.size(); ++k) {
          joins_of_atoms = joins_of_atoms && Bt.orthogonal(atoms[i], atoms[k]);
        }
      }
      joins_of_atoms
          = joins_of_atoms && brute_force_join(Bt, atoms) == FB.dist.B.find(X);
    }
    out.is_morphism   = is_morphism(Bt, T, out.gamma);
    out.extends_theta = true;
    for (auto s : S.elements()) {
      out.extends_theta = out.extends_theta
                          && out.gamma[index(FB.beta[index(s)])] == theta[index(s)];
    }
    out.unique = lifted.unique_by_structure && atoms_are_differences && joins_of_atoms;
    return out;
  }

  struct Hull {
    std::vector<ElementRef> elements;  // D'' in index order
    ElementMap              witness;   // booleanize_distributive(sub) -> ambient
    bool                    isomorphic = false;
  };

  //! Closure of a distributive subalgebra of a Boolean table under relative
  //! complements and then compatible joins, with an isomorphism from the
  //! Booleanization of the subalgebra onto it.
  inline Hull boolean_hull(InverseSemigroup const&  A,
                           std::vector<ElementRef>  sub) {
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    auto reject = [](std::string const& why) {
      fail(error_kind::not_distributive_subalgebra, why);
    };
    std::optional<InverseSemigroup> Sub;
    try {
      Sub.emplace(tabulate_subset(A, sub, "sub"));
    } catch (Error const& e) {
      reject(std::string("not an inverse subsemigroup: ") + e.what());
    }
    if (!classify(*Sub).is_distributive) {
      reject("subsemigroup is not distributive");
    }
    for (auto x : Sub->elements()) {
      for (auto y : Sub->elements()) {
        if (!Sub->compatible(x, y)) {
          continue;
        }
        auto js = brute_force_join(*Sub, x, y);
        auto ja = brute_force_join(A, sub[index(x)], sub[index(y)]);
        if (!js || !ja || sub[index(*js)] != *ja) {
          reject("joins of " + A.label(sub[index(x)]) + " and "
                 + A.label(sub[index(y)]) + " differ from the ambient ones");
        }
      }
    }

    std::set<ElementRef> hull;
    for (auto a : sub) {
      for (auto b : sub) {
        if (A.leq(b, a)) {
          hull.insert(relative_complement(A, a, b));
        }
      }
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<ElementRef> cur(hull.begin(), hull.end());
      for (std::size_t i = 0; i < cur.size(); ++i) {
        for (std::size_t k = i + 1; k < cur.size(); ++k) {
          if (!A.compatible(cur[i], cur[k])) {
            continue;
          }
          auto j = brute_force_join(A, cur[i], cur[k]);
          if (!j) {
            fail(error_kind::not_boolean, "ambient table lacks a compatible join");
          }
          grew = hull.insert(*j).second || grew;
        }
      }
    }
    Hull out;
    out.elements.assign(hull.begin(), hull.end());

    auto const  BS = booleanize_distributive(*Sub);
    auto const& G  = BS.B.groupoid;
    std::vector<ElementRef> atom_image;
    for (std::size_t p = 0; p < G.size(); ++p) {
      auto top   = G.arrows[p];
      auto below = detail::join_below(*Sub, top);
      atom_image.push_back(relative_complement(A, sub[index(top)], sub[index(below)]));
    }
    for (auto const& X : BS.B.bisections) {
      std::vector<ElementRef> images;
      for (auto p : X.arrows()) {
        images.push_back(atom_image[p]);
      }
      auto j = brute_force_join(A, images);
      if (!j) {
        fail(error_kind::not_boolean, "ambient table lacks a compatible join");
      }
      out.witness.push_back(*j);
    }
    std::set<ElementRef> image(out.witness.begin(), out.witness.end());
    out.isomorphic = image == hull && image.size() == out.witness.size()
                     && is_homomorphism(BS.B.table, A, out.witness);
    return out;
  }

}  // namespace boolinv

#endif  // BOOLINV_BOOLEANIZATION_HPP_
