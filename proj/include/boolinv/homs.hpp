#ifndef BOOLINV_HOMS_HPP_
#define BOOLINV_HOMS_HPP_

// Exhaustive enumeration of zero-preserving homomorphisms and morphisms
// between finite inverse semigroups, by backtracking with incremental
// multiplicativity checks.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "boolinv/error.hpp"
#include "boolinv/semigroup.hpp"

namespace boolinv {

  enum class hom_kind { hom, morphism };

  inline constexpr std::size_t default_search_cap = 20'000'000;

  //! Every zero-preserving homomorphism S -> T (kind::morphism also requires
  //! preservation of binary compatible joins). `pins` fixes the images of
  //! some elements; entries left as nullopt are free. Results are in
  //! lexicographic order of image vectors.
  inline std::vector<ElementMap>
  enumerate_homs(InverseSemigroup const&                       S,
                 InverseSemigroup const&                       T,
                 hom_kind                                      kind,
                 std::vector<std::optional<ElementRef>> const& pins = {},
                 std::size_t search_cap = default_search_cap) {
    std::size_t const n = S.size();
    if (!pins.empty() && pins.size() != n) {
      fail(error_kind::malformed_input, "pin vector has the wrong length");
    }
    std::vector<std::int64_t> img(n, -1);
    img[index(S.zero())] = static_cast<std::int64_t>(index(T.zero()));
    if (!pins.empty() && pins[index(S.zero())]
        && *pins[index(S.zero())] != T.zero()) {
      return {};
    }

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i) {
      if (element(i) != S.zero()) {
        order.push_back(i);
      }
    }

    auto consistent = [&](std::size_t a) {
      for (std::size_t x = 0; x < n; ++x) {
        if (img[x] < 0) {
          continue;
        }
        for (std::size_t y = 0; y < n; ++y) {
          if (img[y] < 0) {
            continue;
          }
          auto xy = index(S.mul(element(x), element(y)));
          if (x != a && y != a && xy != a) {
            continue;
          }
          if (img[xy] >= 0
              && static_cast<std::size_t>(img[xy])
                     != index(T.mul(element(img[x]), element(img[y])))) {
            return false;
          }
        }
      }
      return true;
    };

    std::vector<ElementMap> out;
    std::size_t             visited = 0;
    auto                    recurse = [&](auto&& self, std::size_t k) -> void {
      if (++visited > search_cap) {
        fail(error_kind::search_cap,
             "homomorphism search exceeded " + std::to_string(search_cap)
                 + " nodes");
      }
      if (k == order.size()) {
        ElementMap f(n);
        for (std::size_t i = 0; i < n; ++i) {
          f[i] = element(img[i]);
        }
        if (kind == hom_kind::hom || is_morphism(S, T, f)) {
          out.push_back(std::move(f));
        }
        return;
      }
      std::size_t const a = order[k];
      for (std::size_t v = 0; v < T.size(); ++v) {
        if (!pins.empty() && pins[a] && index(*pins[a]) != v) {
          continue;
        }
        img[a] = static_cast<std::int64_t>(v);
        if (consistent(a)) {
          self(self, k + 1);
        }
      }
      img[a] = -1;
    };
    recurse(recurse, 0);
    return out;
  }

}  // namespace boolinv

#endif  // BOOLINV_HOMS_HPP_
