#ifndef BOOLINV_RING_REP_HPP_
#define BOOLINV_RING_REP_HPP_

// The regular representation of the contracted semigroup algebra over the
// integers, the Boolean inverse monoid S'' it generates, and the additive
// representation of the Booleanization onto S''.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "boolinv/booleanization.hpp"
#include "boolinv/int_matrix.hpp"
#include "boolinv/semigroup.hpp"

namespace boolinv {

  inline constexpr std::size_t s_prime_cap        = 5000;
  inline constexpr std::size_t s_double_prime_cap = std::size_t{1} << 16;

  //! M_s v_t = v_{st} on the basis of nonzero elements (0 when st = 0).
  struct RegularRep {
    InverseSemigroup        S;
    std::vector<ElementRef> basis;
    std::vector<IntMatrix>  M;  // indexed by element

    std::size_t dim() const noexcept {
      return basis.size();
    }

    IntMatrix const& of(ElementRef s) const {
      return M.at(index(s));
    }

    IntMatrix unit() const {
      return IntMatrix::identity(dim());
    }
  };

  inline RegularRep regular_representation(InverseSemigroup const& S) {
    if (S.size() > verification_cap) {
      fail(error_kind::size_cap, "table too large for the regular representation");
    }
    RegularRep rep{S, S.nonzero(), {}};
    std::vector<std::size_t> pos(S.size(), SIZE_MAX);
    for (std::size_t i = 0; i < rep.basis.size(); ++i) {
      pos[index(rep.basis[i])] = i;
    }
    for (auto s : S.elements()) {
      IntMatrix m(rep.dim());
      for (std::size_t j = 0; j < rep.basis.size(); ++j) {
        auto st = S.mul(s, rep.basis[j]);
        if (!S.is_zero(st)) {
          m(pos[index(st)], j) = 1;
        }
      }
      rep.M.push_back(std::move(m));
    }
    return rep;
  }

  //! A ring element together with its designated inverse and a record of
  //! how it was built.
  struct RepElement {
    IntMatrix   matrix;
    IntMatrix   inv_matrix;
    std::string provenance;

    bool is_idempotent() const {
      return matrix == inv_matrix && matrix * matrix == matrix;
    }
  };

  inline bool rep_orthogonal(RepElement const& a, RepElement const& b) {
    return (a.inv_matrix * b.matrix).is_zero() && (a.matrix * b.inv_matrix).is_zero();
  }

  //! All M_e (1 - M_e1)...(1 - M_ek) over idempotents e, e_i, sorted by
  //! matrix.
  inline std::vector<RepElement> generate_E_prime(RegularRep const& rep) {
    auto const&                    S = rep.S;
    std::map<IntMatrix, RepElement> found;
    std::deque<IntMatrix>          work;
    for (auto e : S.idempotents()) {
      auto const& m = rep.of(e);
      if (found.emplace(m, RepElement{m, m, S.label(e)}).second) {
        work.push_back(m);
      }
    }
    auto const I = rep.unit();
    while (!work.empty()) {
      auto X = work.front();
      work.pop_front();
      auto const prov = found.at(X).provenance;
      for (auto f : S.idempotents()) {
        auto Y = X * (I - rep.of(f));
        if (found.emplace(Y, RepElement{Y, Y, prov + "(1-" + S.label(f) + ")"}).second) {
          work.push_back(Y);
        }
      }
    }
    std::vector<RepElement> out;
    for (auto& [m, r] : found) {
      out.push_back(std::move(r));
    }
    return out;
  }

  //! S' = {M_s X : X in E'} with designated inverse X M_{s^-1}.
  inline std::vector<RepElement> generate_S_prime(RegularRep const&              rep,
                                                  std::vector<RepElement> const& E_prime) {
    auto const&                     S = rep.S;
    std::map<IntMatrix, RepElement> found;
    for (auto s : S.elements()) {
      for (auto const& X : E_prime) {
        RepElement r{rep.of(s) * X.matrix, X.matrix * rep.of(S.inv(s)),
                     S.label(s) + "*" + X.provenance};
        auto [it, fresh] = found.emplace(r.matrix, r);
        if (!fresh && it->second.inv_matrix != r.inv_matrix) {
          throw std::logic_error("designated inverses disagree in S'");
        }
        if (found.size() > s_prime_cap) {
          fail(error_kind::size_cap, "S' exceeds the cap");
        }
      }
    }
    std::vector<RepElement> out;
    for (auto& [m, r] : found) {
      out.push_back(std::move(r));
    }
    return out;
  }

  //! Sums over orthogonal subsets of S', sorted by matrix.
  inline std::vector<RepElement> orthogonal_sums(std::vector<RepElement> const& S_prime) {
    std::vector<RepElement> nz;
    std::size_t             dim = 0;
    for (auto const& r : S_prime) {
      dim = r.matrix.dim();
      if (!r.matrix.is_zero()) {
        nz.push_back(r);
      }
    }
    std::size_t const              k = nz.size();
    std::vector<std::vector<bool>> orth(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        orth[i][j] = rep_orthogonal(nz[i], nz[j]);
      }
    }
    std::map<IntMatrix, RepElement> found;
    found.emplace(IntMatrix(dim), RepElement{IntMatrix(dim), IntMatrix(dim), "0"});
    // cliques of the orthogonality graph, each listed once in index order
    auto rec = [&](auto&& self, std::vector<std::size_t> const& cand, RepElement const& acc) -> void {
      for (std::size_t c = 0; c < cand.size(); ++c) {
        auto const i = cand[c];
        RepElement next{acc.matrix + nz[i].matrix, acc.inv_matrix + nz[i].inv_matrix,
                        acc.provenance == "0" ? nz[i].provenance
                                              : acc.provenance + " + " + nz[i].provenance};
        auto [it, fresh] = found.emplace(next.matrix, next);
        if (!fresh && it->second.inv_matrix != next.inv_matrix) {
          throw std::logic_error("designated inverses disagree in S''");
        }
        if (found.size() > s_double_prime_cap) {
          fail(error_kind::size_cap, "S'' exceeds the cap");
        }
        std::vector<std::size_t> rest;
        for (std::size_t d = c + 1; d < cand.size(); ++d) {
          if (orth[i][cand[d]]) {
            rest.push_back(cand[d]);
          }
        }
        self(self, rest, next);
      }
    };
    std::vector<std::size_t> all(k);
    for (std::size_t i = 0; i < k; ++i) {
      all[i] = i;
    }
    rec(rec, all, found.begin()->second);
    std::vector<RepElement> out;
    for (auto& [m, r] : found) {
      out.push_back(std::move(r));
    }
    return out;
  }

  inline std::vector<RepElement> generate_boolean_closure(RegularRep const& rep) {
    return orthogonal_sums(generate_S_prime(rep, generate_E_prime(rep)));
  }

  //! Tabulates a multiplicatively closed set of ring elements; labels are
  //! the positions "r0", "r1", ...
  inline CayleyTable tabulate_ring(std::vector<RepElement> const& elems, std::string name) {
    std::map<IntMatrix, std::size_t> pos;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      pos.emplace(elems[i].matrix, i);
    }
    if (elems.empty()) {
      fail(error_kind::malformed_input, "empty ring subset");
    }
    std::size_t const        dim = elems.front().matrix.dim();
    std::vector<std::string> labels;
    std::optional<std::size_t> one;
    std::size_t              zero = SIZE_MAX;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      labels.push_back("r" + std::to_string(i));
      if (elems[i].matrix.is_zero()) {
        zero = i;
      }
      if (elems[i].matrix == IntMatrix::identity(dim)) {
        one = i;
      }
    }
    if (zero == SIZE_MAX) {
      fail(error_kind::malformed_input, "ring subset lacks zero");
    }
    std::vector<std::vector<std::size_t>> rows(elems.size(), std::vector<std::size_t>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < elems.size(); ++j) {
        auto it = pos.find(elems[i].matrix * elems[j].matrix);
        if (it == pos.end()) {
          fail(error_kind::malformed_input, "ring subset is not closed under products");
        }
        rows[i][j] = it->second;
      }
    }
    return CayleyTable(std::move(name), std::move(labels), zero, one, std::move(rows));
  }

  struct AdditiveClosureReport {
    bool                     sums_closed          = true;
    bool                     complements_closed   = true;
    bool                     products_closed      = true;
    bool                     is_inverse_semigroup = false;
    bool                     is_boolean           = false;
    std::vector<std::string> violations;

    bool ok() const {
      return sums_closed && complements_closed && products_closed && is_inverse_semigroup
             && is_boolean;
    }
  };

  //! Orthogonal sums stay inside, e - f stays inside for idempotents f <= e
  //! (1 - e when 1 is present), and the tabulated structure is Boolean.
  inline AdditiveClosureReport verify_additive_closure(std::vector<RepElement> const& elems) {
    AdditiveClosureReport            rep;
    std::map<IntMatrix, std::size_t> pos;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      pos.emplace(elems[i].matrix, i);
    }
    auto lookup = [&](IntMatrix const& m) -> RepElement const* {
      auto it = pos.find(m);
      return it == pos.end() ? nullptr : &elems[it->second];
    };
    for (auto const& a : elems) {
      for (auto const& b : elems) {
        auto const* ab = lookup(a.matrix * b.matrix);
        if (!ab || ab->inv_matrix != b.inv_matrix * a.inv_matrix) {
          if (rep.products_closed) {
            rep.violations.push_back("product " + a.provenance + " . " + b.provenance);
          }
          rep.products_closed = false;
        }
        if (rep_orthogonal(a, b)) {
          auto const* s = lookup(a.matrix + b.matrix);
          if (!s || s->inv_matrix != a.inv_matrix + b.inv_matrix) {
            if (rep.sums_closed) {
              rep.violations.push_back("sum " + a.provenance + " + " + b.provenance);
            }
            rep.sums_closed = false;
          }
        }
        if (a.is_idempotent() && b.is_idempotent() && a.matrix * b.matrix == b.matrix
            && !lookup(a.matrix - b.matrix)) {
          if (rep.complements_closed) {
            rep.violations.push_back("complement " + a.provenance + " - " + b.provenance);
          }
          rep.complements_closed = false;
        }
      }
    }
    if (!rep.products_closed || elems.size() > verification_cap) {
      return rep;
    }
    auto t                   = tabulate_ring(elems, "S''");
    auto v                   = verify_inverse_semigroup(t);
    rep.is_inverse_semigroup = v.ok();
    if (!v.ok()) {
      rep.violations.push_back("inverse semigroup axiom: " + v.violations.front().axiom);
      return rep;
    }
    rep.is_boolean = classify(InverseSemigroup::trusted(t)).is_boolean;
    if (!rep.is_boolean) {
      rep.violations.push_back("tabulated S'' is not Boolean");
    }
    return rep;
  }

  namespace detail {
    // e v f = e + f - ef for commuting idempotents
    inline IntMatrix idempotent_join(IntMatrix const& e, IntMatrix const& f) {
      return e + f - e * f;
    }

    inline ElementRef principal_generator(FullBooleanization const& FB, std::size_t arrow) {
      auto const& P     = FB.dist.B.groupoid;
      auto const& ideal = FB.completion.ideals.at(index(P.arrows.at(arrow)));
      if (ideal.gens.size() != 1) {
        throw std::logic_error("prime ideal with more than one generator");
      }
      return ideal.gens.front();
    }
  }  // namespace detail

  //! Image of each singleton bisection {p}: M_s (M_{d(s)} - D) where p = s↓
  //! and D is the ring join of d(q) over the maximal q strictly below s.
  inline std::vector<IntMatrix> atom_images(RegularRep const& rep, FullBooleanization const& FB) {
    auto const&            S = rep.S;
    std::vector<IntMatrix> out;
    for (std::size_t p = 0; p < FB.dist.B.groupoid.size(); ++p) {
      auto      s = detail::principal_generator(FB, p);
      IntMatrix D(rep.dim());
      for (auto q : maximal_strictly_below(S, s)) {
        D = detail::idempotent_join(D, rep.of(S.dom(q)));
      }
      out.push_back(rep.of(s) * (rep.of(S.dom(s)) - D));
    }
    return out;
  }

  inline IntMatrix theta_star(std::vector<IntMatrix> const& atoms, Bisection X) {
    IntMatrix out(atoms.empty() ? 0 : atoms.front().dim());
    for (auto p : X.arrows()) {
      out = out + atoms.at(p);
    }
    return out;
  }

  inline IntMatrix theta_star(RegularRep const& rep, FullBooleanization const& FB, Bisection X) {
    auto atoms = atom_images(rep, FB);
    if (atoms.empty()) {
      return IntMatrix(rep.dim());
    }
    return theta_star(atoms, X);
  }

  struct RussiaReport {
    std::size_t s_double_prime_size  = 0;
    std::size_t booleanization_size  = 0;
    bool        bijective            = false;
    bool        multiplicative       = false;
    bool        preserves_orthogonal = false;
    bool        extends_embedding    = false;
    bool        inverses_match       = false;
    bool        isomorphic           = false;
    std::string first_mismatch;
    std::vector<IntMatrix> witness;  // theta* of each element of the btable
  };

  //! Compares booleanize(S) with the Boolean inverse monoid S'' inside the
  //! regular representation through theta*.
  inline RussiaReport russia_check(InverseSemigroup const& S) {
    RussiaReport r;
    auto         FB  = booleanize(S);
    auto         rep = regular_representation(S);
    auto         Spp = generate_boolean_closure(rep);
    auto const&  B   = FB.btable();
    auto const&  BT  = FB.dist.B;
    r.s_double_prime_size = Spp.size();
    r.booleanization_size = B.size();

    auto atoms = atom_images(rep, FB);
    for (auto x : B.elements()) {
      r.witness.push_back(atoms.empty() ? IntMatrix(rep.dim()) : theta_star(atoms, BT.at(x)));
    }
    auto note = [&](bool ok, std::string const& what) {
      if (!ok && r.first_mismatch.empty()) {
        r.first_mismatch = what;
      }
      return ok;
    };

    std::map<IntMatrix, std::size_t> spp_pos;
    for (std::size_t i = 0; i < Spp.size(); ++i) {
      spp_pos.emplace(Spp[i].matrix, i);
    }
    std::set<IntMatrix> image(r.witness.begin(), r.witness.end());
    r.bijective = image.size() == r.witness.size() && image.size() == Spp.size();
    for (auto const& m : r.witness) {
      r.bijective = r.bijective && spp_pos.count(m);
    }
    note(r.bijective, "theta* is not a bijection onto S''");

    r.multiplicative       = true;
    r.preserves_orthogonal = true;
    for (auto x : B.elements()) {
      for (auto y : B.elements()) {
        auto const& mx = r.witness[index(x)];
        auto const& my = r.witness[index(y)];
        if (r.witness[index(B.mul(x, y))] != mx * my) {
          r.multiplicative = note(false, "product " + B.label(x) + " . " + B.label(y));
        }
        if (B.orthogonal(x, y)) {
          auto j = BT.find(Bisection{BT.at(x).mask | BT.at(y).mask});
          if (r.witness[index(j)] != mx + my) {
            r.preserves_orthogonal = note(false, "join " + B.label(x) + " v " + B.label(y));
          }
        }
      }
    }

    r.extends_embedding = true;
    for (auto s : S.elements()) {
      if (r.witness[index(FB.beta[index(s)])] != rep.of(s)) {
        r.extends_embedding = note(false, "beta(" + S.label(s) + ") is not sent to M_s");
      }
    }

    r.inverses_match = r.bijective;
    if (r.bijective) {
      for (auto x : B.elements()) {
        auto const& e = Spp[spp_pos.at(r.witness[index(x)])];
        if (e.inv_matrix != r.witness[index(B.inv(x))]) {
          r.inverses_match = note(false, "designated inverse of " + B.label(x));
        }
      }
    }
    r.isomorphic = r.bijective && r.multiplicative && r.preserves_orthogonal
                   && r.extends_embedding && r.inverses_match;
    return r;
  }

}  // namespace boolinv

#endif  // BOOLINV_RING_REP_HPP_
