#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fitgadget/elemset.hpp"

namespace fitgadget {

// Element identity is by multiplication-table index; labels are cosmetic.
using Elem = int;

// Permutation over 0..degree-1 as an image vector. Composition is
// left-to-right: (p * q)(i) = q(p(i)) — apply p first, then q.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
// cycles use 1-based points, matching the ingestion format
Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
std::string perm_cycle_label(const Perm& p);

struct PermSpec {
  int degree = 0;
  // each generator is a list of disjoint cycles over 1..degree
  std::vector<std::vector<std::vector<int>>> generators;
};

class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> mul, std::string source,
              std::vector<std::string> labels = {},
              std::string name = "");

  int order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem x, Elem y) const { return mul_[x * order_ + y]; }
  Elem inv(Elem x) const { return inv_[x]; }
  Elem conj(Elem x, Elem y) const;            // x^y = y^-1 x y
  Elem commutator(Elem x, Elem y) const;      // [x,y] = x^-1 y^-1 x y
  Elem iterated_commutator(Elem x, Elem y, int k) const;  // [x, k y]
  Elem power(Elem x, long long e) const;

  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  const std::string& source() const { return source_; }
  void check_index(Elem x) const;
  std::optional<Elem> find_label(const std::string& label) const;

  const std::vector<int>& mul_table() const { return mul_; }
  std::vector<std::vector<int>> mul_rows() const;

  bool same_table(const FiniteGroup& other) const;

 private:
  int order_;
  std::vector<int> mul_;  // row-major order_ x order_
  std::vector<int> inv_;
  Elem identity_;
  std::vector<std::string> labels_;
  std::string name_;
  std::string source_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr int kDefaultClosureCap = 10000;

// Validated constructors. Generator closure indexes elements in BFS
// discovery order from the identity, generators applied in input order,
// so the numbering of any generated group is reproducible.
GroupPtr group_from_table(std::vector<std::vector<int>> mul,
                          std::vector<std::string> labels = {},
                          std::string name = "");
GroupPtr group_from_permutations(const PermSpec& spec,
                                 int closure_cap = kDefaultClosureCap,
                                 std::string name = "");
GroupPtr group_builtin(const std::string& name);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

// JSON group file: exactly one of "builtin", "permutation_generators",
// "cayley_table"; optional "name" and "labels".
GroupPtr group_from_json_text(const std::string& text);
GroupPtr load_group_file(const std::string& path);
std::string group_to_json_text(const FiniteGroup& g);
void save_group_file(const FiniteGroup& g, const std::string& path);

struct QuotientResult {
  GroupPtr group;
  std::vector<int> proj;  // element index -> coset index
};

// Cosets are indexed by their smallest contained element index.
QuotientResult quotient_group(const FiniteGroup& g, const ElemSet& normal);

struct SubgroupResult {
  GroupPtr group;
  std::vector<int> to_parent;    // subgroup index -> parent index
  std::vector<int> from_parent;  // parent index -> subgroup index or -1
};

// Elements keep ascending parent-index order.
SubgroupResult subgroup_as_group(const FiniteGroup& g, const ElemSet& members);

bool is_subgroup(const FiniteGroup& g, const ElemSet& s);
bool is_normal(const FiniteGroup& g, const ElemSet& s);
bool is_abelian(const FiniteGroup& g);

}  // namespace fitgadget
