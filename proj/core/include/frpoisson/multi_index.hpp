// Packed multi-indices for sparse tensor coefficients. Degree is capped at 4
// (the calculus never goes past trivectors) and basis indices at 255, which
// covers every direct-sum algebra built at desk scale.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace frp {

struct MultiIndex {
  static constexpr int kMaxDeg = 4;

  std::uint8_t deg = 0;
  std::array<std::uint8_t, kMaxDeg> ix{};

  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> list) {
    if (list.size() > kMaxDeg) throw std::length_error("multi-index degree > 4");
    for (int v : list) push_back(v);
  }

  void push_back(int v) {
    if (deg >= kMaxDeg) throw std::length_error("multi-index degree > 4");
    if (v < 0 || v > 255) throw std::out_of_range("basis index out of range");
    ix[deg++] = static_cast<std::uint8_t>(v);
  }

  int operator[](int k) const { return ix[k]; }
  int size() const { return deg; }

  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) = default;
};

// Sorts `m` ascending in place. Returns the permutation sign, or 0 when two
// entries coincide (the wedge vanishes).
inline int sort_wedge(MultiIndex& m) {
  int sign = 1;
  for (int i = 1; i < m.deg; ++i)
    for (int j = i; j > 0 && m.ix[j - 1] >= m.ix[j]; --j) {
      if (m.ix[j - 1] == m.ix[j]) return 0;
      std::swap(m.ix[j - 1], m.ix[j]);
      sign = -sign;
    }
  return sign;
}

inline MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  for (int k = 0; k < b.deg; ++k) r.push_back(b.ix[k]);
  return r;
}

// Removes position `pos`.
inline MultiIndex erase_at(const MultiIndex& a, int pos) {
  MultiIndex r;
  for (int k = 0; k < a.deg; ++k)
    if (k != pos) r.push_back(a.ix[k]);
  return r;
}

}  // namespace frp
