#ifndef BOOLINV_COMPLETION_HPP_
#define BOOLINV_COMPLETION_HPP_

// The distributive completion D(S) of a finite inverse semigroup: finitely
// generated compatible order ideals, each stored by its canonical antichain
// of generators, multiplied by subset multiplication.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boolinv/error.hpp"
#include "boolinv/homs.hpp"
#include "boolinv/semigroup.hpp"

namespace boolinv {

  //! A compatible order ideal, by its sorted antichain of nonzero
  //! generators. The empty generator list is the zero ideal {0}.
  struct Ideal {
    std::vector<ElementRef> gens;

    bool is_zero() const noexcept {
      return gens.empty();
    }

    friend bool operator==(Ideal const&, Ideal const&) = default;

    // Order used to index D(S): by generator count, then lexicographic.
    friend bool operator<(Ideal const& a, Ideal const& b) {
      if (a.gens.size() != b.gens.size()) {
        return a.gens.size() < b.gens.size();
      }
      return a.gens < b.gens;
    }
  };

  inline constexpr std::size_t completion_cap = 20'000;

  //! Drops zeros and dominated generators; the survivors must be pairwise
  //! compatible.
  inline Ideal canonicalize(InverseSemigroup const&     S,
                            std::span<ElementRef const> gens) {
    std::vector<ElementRef> xs;
    for (auto g : gens) {
      if (!S.is_zero(g)) {
        xs.push_back(g);
      }
    }
    Ideal out{maximal_elements(S, xs)};
    for (std::size_t i = 0; i < out.gens.size(); ++i) {
      for (std::size_t j = i + 1; j < out.gens.size(); ++j) {
        if (!S.compatible(out.gens[i], out.gens[j])) {
          fail(error_kind::incompatible_pair,
               S.label(out.gens[i]) + " and " + S.label(out.gens[j])
                   + " are not compatible");
        }
      }
    }
    return out;
  }

  inline Ideal canonicalize(InverseSemigroup const&        S,
                            std::vector<ElementRef> const& gens) {
    return canonicalize(S, std::span<ElementRef const>(gens));
  }

  //! s↓
  inline Ideal principal(InverseSemigroup const& S, ElementRef s) {
    return canonicalize(S, std::vector<ElementRef>{s});
  }

  //! Every element of the ideal, zero included, in index order.
  inline std::vector<ElementRef> ideal_elements(InverseSemigroup const& S,
                                                Ideal const&            A) {
    std::vector<ElementRef> out;
    for (auto x : S.elements()) {
      if (S.is_zero(x)
          || std::any_of(A.gens.begin(), A.gens.end(), [&](ElementRef g) {
               return S.leq(x, g);
             })) {
        out.push_back(x);
      }
    }
    return out;
  }

  inline Ideal ideal_product(InverseSemigroup const& S,
                             Ideal const&            A,
                             Ideal const&            B) {
    std::vector<ElementRef> prods;
    for (auto a : A.gens) {
      for (auto b : B.gens) {
        prods.push_back(S.mul(a, b));
      }
    }
    return canonicalize(S, prods);
  }

  inline Ideal ideal_inverse(InverseSemigroup const& S, Ideal const& A) {
    std::vector<ElementRef> inv;
    for (auto a : A.gens) {
      inv.push_back(S.inv(a));
    }
    return canonicalize(S, inv);
  }

  inline bool ideal_leq(InverseSemigroup const& S, Ideal const& A, Ideal const& B) {
    return std::all_of(A.gens.begin(), A.gens.end(), [&](ElementRef a) {
      return std::any_of(
          B.gens.begin(), B.gens.end(), [&](ElementRef b) { return S.leq(a, b); });
    });
  }

  //! Union of generators; throws IncompatiblePair when the union is not a
  //! compatible set.
  inline Ideal ideal_join(InverseSemigroup const& S, Ideal const& A, Ideal const& B) {
    std::vector<ElementRef> all = A.gens;
    all.insert(all.end(), B.gens.begin(), B.gens.end());
    return canonicalize(S, all);
  }

  //! Intersection of the two element sets.
  inline Ideal ideal_meet(InverseSemigroup const& S, Ideal const& A, Ideal const& B) {
    auto const              a = ideal_elements(S, A);
    auto const              b = ideal_elements(S, B);
    std::vector<ElementRef> common;
    std::set_intersection(
        a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    return canonicalize(S, common);
  }

  inline std::string ideal_label(InverseSemigroup const& S, Ideal const& A) {
    if (A.is_zero()) {
      return "0";
    }
    std::string out = "<";
    for (std::size_t i = 0; i < A.gens.size(); ++i) {
      out += (i ? " | " : "") + S.label(A.gens[i]);
    }
    return out + ">";
  }

  //! All compatible antichains of nonzero elements (the zero ideal
  //! included), sorted in Ideal order.
  inline std::vector<Ideal> enumerate_ideals(InverseSemigroup const& S,
                                             std::size_t cap = completion_cap) {
    auto const         nz = S.nonzero();
    std::vector<Ideal> out;
    std::vector<ElementRef> cur;
    auto recurse = [&](auto&& self, std::size_t from) -> void {
      if (out.size() >= cap) {
        fail(error_kind::size_cap,
             "completion has more than " + std::to_string(cap) + " ideals");
      }
      out.push_back(Ideal{cur});
      for (std::size_t i = from; i < nz.size(); ++i) {
        auto x  = nz[i];
        bool ok = std::all_of(cur.begin(), cur.end(), [&](ElementRef y) {
          return S.compatible(x, y) && !S.leq(x, y) && !S.leq(y, x);
        });
        if (ok) {
          cur.push_back(x);
          self(self, i + 1);
          cur.pop_back();
        }
      }
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  struct Completion {
    InverseSemigroup   dtable;
    std::vector<Ideal> ideals;  // ideals[i] is element i of dtable
    ElementMap         delta;   // s -> s↓

    std::size_t find(Ideal const& A) const {
      auto it = std::lower_bound(ideals.begin(), ideals.end(), A);
      if (it == ideals.end() || !(*it == A)) {
        fail(error_kind::malformed_input, "ideal is not an element of D(S)");
      }
      return static_cast<std::size_t>(it - ideals.begin());
    }
  };

  inline Completion completion_table(InverseSemigroup const& S,
                                     std::size_t cap = completion_cap) {
    auto              ideals = enumerate_ideals(S, cap);
    std::size_t const m      = ideals.size();
    auto find = [&](Ideal const& A) {
      return static_cast<std::size_t>(
          std::lower_bound(ideals.begin(), ideals.end(), A) - ideals.begin());
    };
    std::vector<std::string> labels;
    for (auto const& A : ideals) {
      labels.push_back(ideal_label(S, A));
    }
    std::vector<std::uint32_t> flat(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        flat[i * m + j] = static_cast<std::uint32_t>(
            find(ideal_product(S, ideals[i], ideals[j])));
      }
    }
    std::optional<std::size_t> one;
    if (auto u = S.identity()) {
      one = find(principal(S, *u));
    }
    ElementMap delta(S.size());
    for (auto s : S.elements()) {
      delta[index(s)] = element(find(principal(S, s)));
    }
    CayleyTable t("D(" + S.table().name() + ")",
                  std::move(labels),
                  0,
                  one,
                  std::move(flat));
    return Completion{InverseSemigroup::trusted(std::move(t)),
                      std::move(ideals),
                      std::move(delta)};
  }

  struct CompletionFactorization {
    ElementMap gamma;
    // Every ideal is the join in D(S) of the principal ideals of its
    // generators, so a join-preserving extension of theta is forced.
    bool unique_by_structure = false;
    // Number of morphisms D(S) -> T extending theta, when enumeration was
    // feasible.
    std::optional<std::size_t> morphisms_found;
  };

  //! The unique morphism gamma: D(S) -> T with delta followed by gamma equal
  //! to theta, gamma(<a1..am>) = theta(a1) v ... v theta(am).
  inline CompletionFactorization
  completion_factorize(InverseSemigroup const& S,
                       Completion const&       D,
                       InverseSemigroup const& T,
                       ElementMap const&       theta,
                       std::size_t search_cap = 200'000) {
    if (!is_homomorphism(S, T, theta)) {
      fail(error_kind::malformed_input, "theta is not a homomorphism");
    }
    CompletionFactorization out;
    auto const&             DS = D.dtable;
    out.gamma.resize(DS.size());
    for (std::size_t i = 0; i < D.ideals.size(); ++i) {
      std::vector<ElementRef> images;
      for (auto a : D.ideals[i].gens) {
        images.push_back(theta[index(a)]);
      }
      auto j = brute_force_join(T, images);
      if (!j) {
        fail(error_kind::join_missing,
             "target has no join for the image of " + DS.label(element(i)));
      }
      out.gamma[i] = *j;
    }
    if (!is_morphism(DS, T, out.gamma)) {
      fail(error_kind::not_distributive,
           "target is not distributive: join extension is not a morphism");
    }
    for (auto s : S.elements()) {
      if (out.gamma[index(D.delta[index(s)])] != theta[index(s)]) {
        fail(error_kind::not_distributive, "factorization does not extend theta");
      }
    }

    out.unique_by_structure = true;
    for (std::size_t i = 0; i < D.ideals.size(); ++i) {
      std::vector<ElementRef> parts;
      for (auto a : D.ideals[i].gens) {
        parts.push_back(D.delta[index(a)]);
      }
      if (brute_force_join(DS, parts) != element(i)) {
        out.unique_by_structure = false;
      }
    }

    std::vector<std::optional<ElementRef>> pins(DS.size());
    for (auto s : S.elements()) {
      pins[index(D.delta[index(s)])] = theta[index(s)];
    }
    try {
      out.morphisms_found
          = enumerate_homs(DS, T, hom_kind::morphism, pins, search_cap).size();
    } catch (Error const& e) {
      if (e.kind() != error_kind::search_cap) {
        throw;
      }
    }
    return out;
  }

}  // namespace boolinv

#endif  // BOOLINV_COMPLETION_HPP_
