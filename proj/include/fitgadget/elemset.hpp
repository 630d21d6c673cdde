#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace fitgadget {

// Subset of a group's element indices as a 0/1 mask. Comparison is
// lexicographic on the mask, which doubles as the canonical "bit set"
// order used when sorting subgroup lattices.
struct ElemSet {
  std::vector<uint8_t> m;

  ElemSet() = default;
  explicit ElemSet(int n) : m(n, 0) {}

  int size() const { return static_cast<int>(m.size()); }
  bool test(int i) const { return m[i] != 0; }
  void set(int i) { m[i] = 1; }
  void reset(int i) { m[i] = 0; }

  int count() const {
    int c = 0;
    for (uint8_t b : m) c += b;
    return c;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (m[i]) out.push_back(i);
    return out;
  }

  bool contains(const ElemSet& other) const {
    for (int i = 0; i < size(); ++i)
      if (other.m[i] && !m[i]) return false;
    return true;
  }

  static ElemSet full(int n) {
    ElemSet s(n);
    for (auto& b : s.m) b = 1;
    return s;
  }

  static ElemSet singleton(int n, int i) {
    ElemSet s(n);
    s.set(i);
    return s;
  }

  static ElemSet of(int n, const std::vector<int>& idxs) {
    ElemSet s(n);
    for (int i : idxs) s.set(i);
    return s;
  }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;
  friend auto operator<=>(const ElemSet& a, const ElemSet& b) {
    return a.m <=> b.m;
  }
};

// (order, lexicographic mask) — the canonical lattice sort key.
inline bool lattice_less(const ElemSet& a, const ElemSet& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.m < b.m;
}

}  // namespace fitgadget
