// Two compatible antichains in I2 with the same join but different ideals,
// and what the completion D(I2) does with them.

#include <iostream>

#include "boolinv/catalog.hpp"
#include "boolinv/completion.hpp"

using namespace boolinv;

int main() {
  InverseSemigroup S(symmetric_inverse_monoid(2));
  auto a  = by_label(S, "{1->2}");
  auto b  = by_label(S, "{2->1}");
  auto sw = by_label(S, "{1->2,2->1}");

  auto show = [&](char const* name, Ideal const& A) {
    std::cout << name << " = " << ideal_label(S, A) << " contains";
    for (auto x : ideal_elements(S, A)) {
      std::cout << ' ' << S.label(x);
    }
    std::cout << '\n';
  };
  auto whole = principal(S, sw);
  auto split = canonicalize(S, {a, b});
  show("swap ideal", whole);
  show("pair ideal", split);

  auto j = brute_force_join(S, a, b);
  std::cout << "join of the pair in I2: " << (j ? S.label(*j) : "none") << '\n';

  auto D = completion_table(S);
  std::cout << "|I2| = " << S.size() << ", |D(I2)| = " << D.dtable.size() << '\n';

  // factor the identity of I2 through D(I2)
  auto f = completion_factorize(S, D, S, S.elements());
  std::cout << "gamma(swap ideal) = " << S.label(f.gamma[D.find(whole)])
            << ", gamma(pair ideal) = " << S.label(f.gamma[D.find(split)]) << '\n';
  return 0;
}
