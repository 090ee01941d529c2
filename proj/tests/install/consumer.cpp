#include <knotsemi/knotsemi.hpp>

int main() {
  auto s = knotsemi::dtw_alphabet(2, 2).semigroup();
  return s.count_elements(3) == 5 ? 0 : 1;
}
