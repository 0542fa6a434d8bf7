// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "boolinv/booleanization.hpp"
#include "boolinv/catalog.hpp"
#include "boolinv/completion.hpp"
#include "boolinv/cuntz_toeplitz.hpp"
#include "boolinv/definite_lang.hpp"
#include "boolinv/homs.hpp"
#include "boolinv/ring_rep.hpp"
#include "word_oracles.hpp"

using namespace boolinv;

namespace {

  struct Tally {
    std::size_t checks = 0;
    std::size_t failed = 0;
    std::string first;

    void expect(bool ok, std::string const& what) {
      ++checks;
      if (!ok && failed++ == 0) {
        first = what;
      }
    }
  };

  InverseSemigroup I2() {
    return InverseSemigroup(symmetric_inverse_monoid(2));
  }

  bool injective(ElementMap const& f) {
    return std::set<ElementRef>(f.begin(), f.end()).size() == f.size();
  }

  ElementMap identity_map(InverseSemigroup const& S) {
    return S.elements();
  }

  std::vector<std::vector<ElementRef>> small_subsets(std::vector<ElementRef> const& xs) {
    std::vector<std::vector<ElementRef>> out{{}};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out.push_back({xs[i]});
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        out.push_back({xs[i], xs[j]});
      }
    }
    return out;
  }

  std::vector<ElementRef> strictly_below(InverseSemigroup const& S, ElementRef a) {
    std::vector<ElementRef> out;
    for (auto x : S.below(a)) {
      if (x != a) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool subset(Bisection x, Bisection y) {
    return (x.mask & ~y.mask) == 0;
  }

  // -- 1 ---------------------------------------------------------------------

  void same_join_ideals(Tally& t) {
    auto S  = I2();
    auto a  = by_label(S, "{1->2}");
    auto b  = by_label(S, "{2->1}");
    auto sw = by_label(S, "{1->2,2->1}");
    auto whole = principal(S, sw);
    auto split = canonicalize(S, {a, b});
    t.expect(ideal_elements(S, whole).size() == 4, "swap ideal has 4 elements");
    t.expect(ideal_elements(S, split).size() == 3, "{1->2, 2->1} ideal has 3 elements");
    t.expect(!(whole == split), "the two ideals differ");
    t.expect(brute_force_join(S, std::vector<ElementRef>{a, b}) == sw, "join of the pair is swap");
    t.expect(brute_force_join(S, std::vector<ElementRef>{sw}) == sw, "join of swap is swap");

    auto D = completion_table(S);
    auto f = completion_factorize(S, D, S, identity_map(S));
    std::set<ElementRef> image(f.gamma.begin(), f.gamma.end());
    t.expect(image.size() == S.size(), "gamma is onto");
    t.expect(!injective(f.gamma), "gamma is not injective");
    t.expect(f.gamma[D.find(whole)] == f.gamma[D.find(split)], "both ideals map to swap");
  }

  // -- 2 ---------------------------------------------------------------------

  void booleanize_I2(Tally& t) {
    auto S  = I2();
    auto BD = booleanize_distributive(S);
    t.expect(BD.B.table.size() == 7, "booleanize_distributive(I2) has 7 elements");
    t.expect(injective(BD.beta) && is_morphism(S, BD.B.table, BD.beta),
             "beta is an injective morphism");

    auto FB = booleanize(S);
    auto DB = direct_booleanize(S, FB);
    t.expect(FB.btable().size() == 21, "booleanize(I2) has 21 elements");
    t.expect(DB.B.table.size() == 21, "direct_booleanize(I2) has 21 elements");
    t.expect(DB.groupoid_iso && DB.certified, "certified isomorphism");
    t.expect(injective(DB.iso) && is_homomorphism(DB.B.table, FB.btable(), DB.iso),
             "iso is a bijective homomorphism");
  }

  // -- 3 ---------------------------------------------------------------------

  void normalization(Tally& t) {
    auto words = [](std::vector<char const*> ws) {
      WordSet out;
      for (auto w : ws) {
        out.insert(parse_word(w, 3));
      }
      return out;
    };
    auto L = normalize(3, words({"0", "201", "212"}), words({"00", "20", "01", "02"}));
    t.expect(L.bounded == words({"212"}), "bounded part is {212}");
    t.expect(L.code == words({"0", "20"}), "code is {0, 20}");
  }

  // -- 4 ---------------------------------------------------------------------

  void u_set_identities(Tally& t, InverseSemigroup const& S) {
    auto L   = proper_filter_groupoid(S);
    auto all = S.elements();
    auto U   = [&](ElementRef a, std::vector<ElementRef> const& o) { return u_set(S, L, a, o); };
    auto omits = small_subsets(all);
    std::string const n = S.table().name() + ": ";
    for (auto a : all) {
      if (!S.is_zero(a)) {
        for (auto const& o : small_subsets(S.below(a))) {
          bool hit = std::find(o.begin(), o.end(), a) != o.end();
          t.expect(U(a, o).empty() == hit, n + "emptiness");
        }
      }
      for (auto const& o : omits) {
        auto                    Ua = U(a, o);
        std::vector<ElementRef> oi;
        for (auto x : o) {
          oi.push_back(S.inv(x));
        }
        t.expect(bisection_inverse(L, Ua) == U(S.inv(a), oi), n + "inverse");
        if (!Ua.empty()) {
          t.expect((bisection_product(L, Ua, Ua) == Ua) == S.is_idempotent(a), n + "idempotent");
        }
        for (auto b : all) {
          for (auto const& p : omits) {
            std::vector<ElementRef> prod;
            for (auto x : p) {
              prod.push_back(S.mul(a, x));
            }
            for (auto x : o) {
              prod.push_back(S.mul(x, b));
            }
            t.expect(bisection_product(L, Ua, U(b, p)) == U(S.mul(a, b), prod), n + "product");
          }
        }
      }
      for (auto const& o : small_subsets(S.below(a))) {
        auto                    Ua = U(a, o);
        std::vector<ElementRef> od;
        for (auto x : o) {
          od.push_back(S.dom(x));
        }
        t.expect(bisection_product(L, bisection_inverse(L, Ua), Ua) == U(S.dom(a), od),
                 n + "domain");
      }
    }
    for (auto e : S.idempotents()) {
      for (auto f : S.idempotents()) {
        for (auto const& oe : small_subsets(strictly_below(S, e))) {
          for (auto const& of : small_subsets(strictly_below(S, f))) {
            std::vector<ElementRef> omit;
            for (auto x : oe) {
              omit.push_back(S.mul(f, x));
            }
            for (auto x : of) {
              omit.push_back(S.mul(e, x));
            }
            t.expect(bisection_boolean(L, bisection_op::meet, U(e, oe), U(f, of))
                         == U(S.mul(e, f), omit),
                     n + "intersection");
          }
        }
      }
    }
  }

  void v_set_products(Tally& t, InverseSemigroup const& D, FilterGroupoid const& G) {
    for (auto s : D.elements()) {
      for (auto tt : D.below(s)) {
        auto Vst = v_set(D, G, s, tt);
        for (auto u : D.elements()) {
          for (auto v : D.below(u)) {
            auto j = brute_force_join(D, D.mul(s, v), D.mul(tt, u));
            t.expect(j && bisection_product(G, Vst, v_set(D, G, u, v))
                              == v_set(D, G, D.mul(s, u), *j),
                     D.table().name() + ": V-set product");
          }
        }
      }
    }
  }

  void idempotent_containment(Tally& t, InverseSemigroup const& D, FilterGroupoid const& G) {
    auto E = D.idempotents();
    for (auto e : E) {
      for (auto f : strictly_below(D, e)) {
        for (auto i : E) {
          for (auto j : strictly_below(D, i)) {
            bool contained = subset(v_set(D, G, e, f), v_set(D, G, i, j));
            bool lattice   = brute_force_join(D, f, D.mul(e, i)) == e
                           && D.mul(f, j) == D.mul(e, j);
            t.expect(contained == lattice, D.table().name() + ": idempotent containment");
          }
        }
      }
    }
  }

  void containment(Tally& t, InverseSemigroup const& D, FilterGroupoid const& G) {
    for (auto a : D.elements()) {
      for (auto b : strictly_below(D, a)) {
        for (auto c : D.elements()) {
          for (auto d : strictly_below(D, c)) {
            bool lhs = subset(v_set(D, G, a, b), v_set(D, G, c, d));
            bool dom = subset(v_set(D, G, D.dom(a), D.dom(b)), v_set(D, G, D.dom(c), D.dom(d)));
            bool split = false;
            for (auto x : D.below(c)) {
              split = split || (D.compatible(b, x) && brute_force_join(D, b, x) == a);
            }
            t.expect(lhs == (dom && split), D.table().name() + ": containment criterion");
          }
        }
      }
    }
  }

  void decompositions(Tally& t, InverseSemigroup const& D, FilterGroupoid const& G) {
    auto meet_all = [&](std::vector<ElementRef> const& xs) {
      ElementRef m = xs.front();
      for (auto x : xs) {
        m = compatible_meet(D, m, x);
      }
      return m;
    };
    for (auto a : D.elements()) {
      for (auto b : D.below(a)) {
        std::vector<std::pair<ElementRef, ElementRef>> pieces;
        for (auto ai : D.below(a)) {
          for (auto bi : D.below(ai)) {
            if (D.leq(b, bi)) {
              pieces.emplace_back(ai, bi);
            }
          }
        }
        auto check = [&](std::vector<std::size_t> const& pick) {
          Bisection               uni;
          std::vector<ElementRef> as, bs;
          for (auto k : pick) {
            auto V = v_set(D, G, pieces[k].first, pieces[k].second);
            if (!is_bisection(G, Bisection{uni.mask | V.mask})) {
              return;
            }
            uni.mask |= V.mask;
            as.push_back(pieces[k].first);
            bs.push_back(pieces[k].second);
          }
          bool c1 = brute_force_join(D, as) == a;
          bool c2 = meet_all(bs) == b;
          bool c3 = true;
          std::size_t const m = pick.size();
          for (std::size_t X = 1; X + 1 < (std::size_t{1} << m); ++X) {
            std::vector<ElementRef> in, out;
            for (std::size_t i = 0; i < m; ++i) {
              if (X >> i & 1) {
                in.push_back(bs[i]);
              } else {
                out.push_back(as[i]);
              }
            }
            auto j = brute_force_join(D, out);
            c3     = c3 && j && D.leq(meet_all(in), *j);
          }
          t.expect((uni == v_set(D, G, a, b)) == (c1 && c2 && c3),
                   D.table().name() + ": decomposition");
        };
        for (std::size_t i = 0; i < pieces.size(); ++i) {
          check({i});
          for (std::size_t k = i + 1; k < pieces.size(); ++k) {
            check({i, k});
            for (std::size_t l = k + 1; l < pieces.size() && pieces.size() < 12; ++l) {
              check({i, k, l});
            }
          }
        }
      }
    }
  }

  void bisection_identities(Tally& t) {
    for (auto const& name : {"I2", "chain3", "antichain3"}) {
      u_set_identities(t, InverseSemigroup(builtin(name)));
    }
    // The V-set statements need a distributive table; antichain3 is not one,
    // so its completion stands in for it.
    std::vector<InverseSemigroup> dist;
    dist.push_back(I2());
    dist.emplace_back(chain3());
    dist.push_back(completion_table(InverseSemigroup(antichain3())).dtable);
    dist.push_back(completion_table(I2()).dtable);
    for (auto const& D : dist) {
      auto G = prime_groupoid(D);
      v_set_products(t, D, G);
      idempotent_containment(t, D, G);
      containment(t, D, G);
      decompositions(t, D, G);
    }
  }

  // -- 5 ---------------------------------------------------------------------

  void universal_property(Tally& t) {
    for (auto const& sname : {"I1", "I2", "chain3", "antichain3", "bool2", "bool4"}) {
      InverseSemigroup S(builtin(sname));
      auto             FB = booleanize(S);
      for (auto const& tname : {"bool2", "bool4", "I2"}) {
        InverseSemigroup T(builtin(tname));
        std::string const where = std::string(sname) + " -> " + tname;
        auto homs = enumerate_homs(S, T, hom_kind::hom);
        t.expect(!homs.empty(), where + ": zero map exists");
        for (auto const& theta : homs) {
          auto f = factor_through(S, FB, theta, T);
          t.expect(f.is_morphism, where + ": gamma is a morphism");
          t.expect(f.extends_theta, where + ": beta then gamma is theta");
          t.expect(f.unique, where + ": uniqueness certificate");
          std::vector<std::optional<ElementRef>> pins(FB.btable().size());
          for (auto s : S.elements()) {
            pins[index(FB.beta[index(s)])] = theta[index(s)];
          }
          auto all = enumerate_homs(FB.btable(), T, hom_kind::morphism, pins);
          t.expect(all.size() == 1 && all.front() == f.gamma,
                   where + ": only one extending morphism");
        }
      }
    }
  }

  // -- 6 ---------------------------------------------------------------------

  void ring_check(Tally& t) {
    struct Expect {
      char const* name;
      std::size_t size;
    };
    for (auto [name, size] : {Expect{"I1", 2}, Expect{"chain3", 4}, Expect{"antichain3", 4},
                              Expect{"I2", 21}}) {
      auto r = russia_check(InverseSemigroup(builtin(name)));
      std::string const n = name;
      t.expect(r.s_double_prime_size == size, n + ": |S''|");
      t.expect(r.booleanization_size == size, n + ": |B(S)|");
      t.expect(r.isomorphic && r.bijective && r.multiplicative && r.preserves_orthogonal
                   && r.extends_embedding && r.inverses_match,
               n + ": theta* certified");
    }
  }

  // -- 7 and 8 ---------------------------------------------------------------

  std::optional<Word> ref_apply(PermMap const& m, Word const& x) {
    return word_oracle::apply(m.finite, m.table, x);
  }

  DefiniteLang random_sublanguage(DefiniteLang const& L, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t>   count(0, 4), len(0, 3);
    std::uniform_int_distribution<std::uint32_t> sym(0, static_cast<std::uint32_t>(L.alphabet - 1));
    WordSet                                      X, Y;
    for (auto* W : {&X, &Y}) {
      for (std::size_t i = count(rng); i > 0; --i) {
        Word x(len(rng));
        for (auto& s : x) {
          s = sym(rng);
        }
        W->insert(x);
      }
    }
    return combine(lang_op::intersect, L, normalize(L.alphabet, X, Y));
  }

  void ct_oracle(Tally& t) {
    auto const probes = word_oracle::all_words(2, 6);
    auto agrees = [&](PermMap const& m, auto&& expected) {
      return std::all_of(probes.begin(), probes.end(),
                         [&](Word const& x) { return pm_apply(m, x) == expected(x); });
    };
    auto canonical = [](PermMap const& m) { return pm_canonicalize(m) == m; };
    using Out = std::optional<Word>;

    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_perm_map(2, 3, rng);
      auto b = random_perm_map(2, 3, rng);
      t.expect(canonical(a) && is_permissible(a), "generator output is canonical");

      auto ab = pm_compose(a, b);
      t.expect(canonical(ab), "compose is canonical");
      t.expect(agrees(ab, [&](Word const& x) -> Out {
                 auto mid = ref_apply(b, x);
                 return mid ? ref_apply(a, *mid) : std::nullopt;
               }),
               "compose");

      auto ai = pm_inverse(a);
      t.expect(canonical(ai), "inverse is canonical");
      t.expect(std::all_of(probes.begin(), probes.end(),
                           [&](Word const& x) {
                             auto v = ref_apply(a, x);
                             auto u = pm_apply(ai, x);
                             return (!v || pm_apply(ai, *v) == x)
                                    && (!u || ref_apply(a, *u) == x);
                           }),
               "inverse");

      auto fx = pm_fix(a);
      t.expect(std::all_of(probes.begin(), probes.end(),
                           [&](Word const& x) { return member(fx, x) == (ref_apply(a, x) == x); }),
               "fix");

      auto m = pm_meet(a, b);
      t.expect(canonical(m), "meet is canonical");
      t.expect(agrees(m, [&](Word const& x) -> Out {
                 auto u = ref_apply(a, x);
                 return u && u == ref_apply(b, x) ? u : std::nullopt;
               }),
               "meet");

      auto dom = pm_domain(a);
      auto r1  = pm_restrict(a, random_sublanguage(dom, rng));
      auto r2  = pm_restrict(a, random_sublanguage(dom, rng));
      auto j   = pm_join(r1, r2);
      t.expect(canonical(j), "join is canonical");
      t.expect(agrees(j, [&](Word const& x) -> Out {
                 auto u = ref_apply(r1, x);
                 return u ? u : ref_apply(r2, x);
               }),
               "join");

      auto s = pm_subtract(a, r1);
      t.expect(canonical(s), "subtract is canonical");
      t.expect(agrees(s, [&](Word const& x) -> Out {
                 return ref_apply(r1, x) ? std::nullopt : ref_apply(a, x);
               }),
               "subtract");

      t.expect(pm_canonicalize(pm_canonicalize(a)) == pm_canonicalize(a),
               "canonicalization is idempotent");
    }

    std::uniform_int_distribution<std::size_t>   len(0, 3);
    std::uniform_int_distribution<std::uint32_t> sym(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
      Word u(len(rng)), v(len(rng));
      for (auto& x : u) {
        x = sym(rng);
      }
      for (auto& x : v) {
        x = sym(rng);
      }
      auto f = pm_canonicalize(2, {}, {{u, v}});
      auto g = pm_canonicalize(2, {}, {{concat(u, {0}), concat(v, {0})},
                                       {concat(u, {1}), concat(v, {1})}});
      t.expect(pm_subtract(f, g) == pm_canonicalize(2, {{u, v}}, {}),
               "cone minus its children is one point");
    }
  }

  void quotient(Tally& t) {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_perm_map(2, 3, rng);
      auto b = random_perm_map(2, 3, rng);
      t.expect(quotient_theta(pm_compose(a, b))
                   == cuntz_product(quotient_theta(a), quotient_theta(b)),
               "quotient is multiplicative");
      t.expect(congruence(a, b).agree(), "congruence tests agree");

      WordSet cut;
      for (auto const& [y, z] : a.table) {
        cut.insert(y);
      }
      auto trimmed = pm_restrict(a, combine(lang_op::difference, pm_domain(a),
                                            DefiniteLang{2, cut, {}}));
      auto c = congruence(a, trimmed);
      t.expect(c.agree() && c.by_quotient, "finite change is congruent");

      t.expect(quotient_theta(a).table.empty() == a.table.empty(), "kernel is the empty tables");
      t.expect(quotient_theta(PermMap{2, a.finite, {}}).table.empty(), "finite part is killed");
      t.expect(congruent(PermMap{2, a.finite, {}}, pm_empty(2)), "finite part congruent to 0");
    }
  }

  // -- 9 and 10 --------------------------------------------------------------

  std::vector<std::string> const catalog = {"I1", "I2", "chain3", "antichain3", "bool2", "bool4"};

  void hull(Tally& t) {
    for (auto const& name : catalog) {
      auto FB = booleanize(InverseSemigroup(builtin(name)));
      auto h  = boolean_hull(FB.btable(), FB.dist.beta);
      t.expect(h.elements == FB.btable().elements(), name + ": hull is everything");
      t.expect(h.isomorphic, name + ": hull isomorphism");
    }
  }

  void groupoids(Tally& t) {
    for (auto const& name : catalog) {
      InverseSemigroup S(builtin(name));
      auto             FB  = booleanize(S);
      auto             L   = proper_filter_groupoid(S);
      auto             map = principal_arrow_map(L, FB);
      t.expect(map.size() == L.size(), name + ": every principal filter is prime");
      t.expect(groupoid_isomorphic(L, FB.dist.B.groupoid, map), name + ": groupoid isomorphism");
    }
  }

  struct Criterion {
    int                         id;
    char const*                 title;
    double                      budget_s;
    std::function<void(Tally&)> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {1, "two ideals with the same join in D(I2)", 1, same_join_ideals},
      {2, "Booleanizations of I2", 5, booleanize_I2},
      {3, "definite language normalization", 1, normalization},
      {4, "U-set and V-set identities", 30, bisection_identities},
      {5, "factorization through the Booleanization", 60, universal_property},
      {6, "ring realisation of the Booleanization", 60, ring_check},
      {7, "permissible maps against the pointwise oracle", 30, ct_oracle},
      {8, "Cuntz quotient", 30, quotient},
      {9, "Boolean hull of D(S)", 30, hull},
      {10, "filter groupoid vs prime groupoid", 5, groupoids},
  };

  int failures = 0;
  for (auto const& c : criteria) {
    Tally t;
    auto  start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (std::exception const& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool   slow = secs > c.budget_s;
    bool   ok   = t.failed == 0 && !slow;
    failures += ok ? 0 : 1;
    std::printf("%s %2d  %-48s %8zu checks  %6.2fs / %gs", ok ? "PASS" : "FAIL", c.id, c.title,
                t.checks, secs, c.budget_s);
    if (t.failed) {
      std::printf("  (%zu failed, first: %s)", t.failed, t.first.c_str());
    } else if (slow) {
      std::printf("  (over time budget)");
    }
    std::printf("\n");
  }
  return failures == 0 ? 0 : 1;
}
