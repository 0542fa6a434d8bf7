// Normal forms and Boolean operations on definite languages X + YA*.

#include <iostream>

#include "boolinv/definite_lang.hpp"

using namespace boolinv;

namespace {
  WordSet words(std::initializer_list<char const*> ws, std::size_t n) {
    WordSet out;
    for (auto w : ws) {
      out.insert(parse_word(w, n));
    }
    return out;
  }

  void print(char const* name, DefiniteLang const& L) {
    std::cout << name << ": bounded {";
    char const* sep = "";
    for (auto const& w : L.bounded) {
      std::cout << sep << (w.empty() ? "e" : to_string(w));
      sep = ", ";
    }
    std::cout << "}, code {";
    sep = "";
    for (auto const& w : L.code) {
      std::cout << sep << (w.empty() ? "e" : to_string(w));
      sep = ", ";
    }
    std::cout << "}\n";
  }
}  // namespace

int main() {
  auto L = normalize(3, words({"0", "201", "212"}, 3), words({"00", "20", "01", "02"}, 3));
  print("L", L);

  auto C = combine(lang_op::complement, L);
  print("complement of L", C);
  print("L union complement", combine(lang_op::union_, L, C));

  auto M = normalize(3, words({"1"}, 3), words({"21"}, 3));
  print("M", M);
  print("L intersect M", combine(lang_op::intersect, L, M));
  print("M minus L", combine(lang_op::difference, M, L));

  auto e = is_essential(words({"0", "10", "11"}, 2), 2);
  std::cout << "{0, 10, 11} essential over {0,1}: " << (e.essential ? "yes" : "no") << '\n';
  return 0;
}
