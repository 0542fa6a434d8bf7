#ifndef BOOLINV_CATALOG_HPP_
#define BOOLINV_CATALOG_HPP_

// Small named inverse semigroups used throughout tests, demos and the CLI.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "boolinv/error.hpp"
#include "boolinv/semigroup.hpp"

namespace boolinv {

  namespace detail {
    // Partial injection on {0..n-1}; img[x] == -1 means undefined.
    using PartialInjection = std::vector<int>;

    inline std::string injection_label(PartialInjection const& f) {
      std::string out = "{";
      bool        first = true;
      for (std::size_t x = 0; x < f.size(); ++x) {
        if (f[x] < 0) {
          continue;
        }
        if (!first) {
          out += ",";
        }
        first = false;
        out += std::to_string(x + 1) + "->" + std::to_string(f[x] + 1);
      }
      return out + "}";
    }
  }  // namespace detail

  inline constexpr std::size_t symmetric_inverse_monoid_cap = 5;

  //! All partial injections of {1..n} under composition, apply-right-first.
  //! Element 0 is the empty map; elements are ordered by domain size, then
  //! domain, then image.
  inline CayleyTable symmetric_inverse_monoid(std::size_t n) {
    if (n == 0) {
      fail(error_kind::malformed_input, "symmetric inverse monoid needs n >= 1");
    }
    if (n > symmetric_inverse_monoid_cap) {
      fail(error_kind::size_cap,
           "symmetric inverse monoid refused for n = " + std::to_string(n));
    }
    std::vector<detail::PartialInjection> elems;
    for (std::size_t k = 0; k <= n; ++k) {
      // domains of size k in lexicographic order
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + k, true);
      do {
        std::vector<int> dom;
        for (std::size_t i = 0; i < n; ++i) {
          if (pick[i]) {
            dom.push_back(static_cast<int>(i));
          }
        }
        std::vector<bool> ipick(n, false);
        std::fill(ipick.begin(), ipick.begin() + k, true);
        do {
          std::vector<int> img;
          for (std::size_t i = 0; i < n; ++i) {
            if (ipick[i]) {
              img.push_back(static_cast<int>(i));
            }
          }
          do {
            detail::PartialInjection f(n, -1);
            for (std::size_t i = 0; i < k; ++i) {
              f[dom[i]] = img[i];
            }
            elems.push_back(f);
          } while (std::next_permutation(img.begin(), img.end()));
        } while (std::prev_permutation(ipick.begin(), ipick.end()));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }

    std::size_t const        m = elems.size();
    std::vector<std::string> labels;
    for (auto const& f : elems) {
      labels.push_back(detail::injection_label(f));
    }
    std::map<detail::PartialInjection, std::size_t> position;
    for (std::size_t i = 0; i < m; ++i) {
      position.emplace(elems[i], i);
    }
    auto find = [&](detail::PartialInjection const& f) {
      return position.at(f);
    };
    std::vector<std::uint32_t> flat(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        detail::PartialInjection h(n, -1);
        for (std::size_t x = 0; x < n; ++x) {
          if (elems[j][x] >= 0) {
            h[x] = elems[i][elems[j][x]];
          }
        }
        flat[i * m + j] = static_cast<std::uint32_t>(find(h));
      }
    }
    detail::PartialInjection id(n);
    std::iota(id.begin(), id.end(), 0);
    return CayleyTable("I" + std::to_string(n),
                       std::move(labels),
                       0,
                       find(id),
                       std::move(flat));
  }

  //! The three-element chain 0 < e < 1 under meet.
  inline CayleyTable chain3() {
    return CayleyTable("chain3",
                       {"0", "e", "1"},
                       0,
                       2,
                       std::vector<std::vector<std::size_t>>{
                           {0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
  }

  //! Two incomparable idempotents e, f over a zero; not a monoid.
  inline CayleyTable antichain3() {
    return CayleyTable("antichain3",
                       {"0", "e", "f"},
                       0,
                       std::nullopt,
                       std::vector<std::vector<std::size_t>>{
                           {0, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  }

  //! Boolean algebra of subsets of `atoms` points (at most 3) under
  //! intersection. Labels: "0", "1" and letter strings from "xyz".
  inline CayleyTable boolean_algebra(std::size_t atoms) {
    if (atoms == 0 || atoms > 3) {
      fail(error_kind::malformed_input, "boolean_algebra supports 1..3 atoms");
    }
    std::size_t const        m    = std::size_t{1} << atoms;
    std::size_t const        full = m - 1;
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < m; ++s) {
      if (s == 0) {
        labels.emplace_back("0");
      } else if (s == full) {
        labels.emplace_back("1");
      } else {
        std::string l;
        for (std::size_t b = 0; b < atoms; ++b) {
          if (s >> b & 1) {
            l += "xyz"[b];
          }
        }
        labels.push_back(l);
      }
    }
    std::vector<std::uint32_t> flat(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        flat[i * m + j] = static_cast<std::uint32_t>(i & j);
      }
    }
    return CayleyTable("bool" + std::to_string(m),
                       std::move(labels),
                       0,
                       full,
                       std::move(flat));
  }

  inline std::vector<std::string> builtin_names() {
    return {"I1", "I2", "I3", "chain3", "antichain3", "bool2", "bool4"};
  }

  inline CayleyTable builtin(std::string const& name) {
    if (name == "I1") {
      return symmetric_inverse_monoid(1);
    } else if (name == "I2") {
      return symmetric_inverse_monoid(2);
    } else if (name == "I3") {
      return symmetric_inverse_monoid(3);
    } else if (name == "chain3") {
      return chain3();
    } else if (name == "antichain3") {
      return antichain3();
    } else if (name == "bool2") {
      return boolean_algebra(1);
    } else if (name == "bool4") {
      return boolean_algebra(2);
    }
    fail(error_kind::malformed_input, "unknown builtin table '" + name + "'");
  }

  //! Element of a table by label; throws MalformedInput when absent.
  inline ElementRef by_label(CayleyTable const& t, std::string const& label) {
    auto const& ls = t.labels();
    auto        it = std::find(ls.begin(), ls.end(), label);
    if (it == ls.end()) {
      fail(error_kind::malformed_input,
           "no element labelled '" + label + "' in " + t.name());
    }
    return element(static_cast<std::size_t>(it - ls.begin()));
  }

  inline ElementRef by_label(InverseSemigroup const& S, std::string const& label) {
    return by_label(S.table(), label);
  }

}  // namespace boolinv

#endif  // BOOLINV_CATALOG_HPP_
