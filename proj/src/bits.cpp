#include "talg/bits.hpp"

namespace talg {

std::vector<int> bit_indices(Bits s) {
  std::vector<int> out;
  while (s) {
    int i = std::countr_zero(s);
    out.push_back(i);
    s &= s - 1;
  }
  return out;
}

Bits bits_of(const std::vector<int>& indices) {
  Bits s = 0;
  for (int i : indices) s |= bit(i);
  return s;
}

}  // namespace talg
