#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fitgadget/group.hpp"

namespace fitgadget {

using BigInt = boost::multiprecision::cpp_int;

// Group polynomial as a straight-line program: an append-only node list
// with strictly backward references. Shared subexpressions keep gadget
// polynomials small even when their flattened word length is astronomical.
class GroupPolynomial {
 public:
  enum class Op : uint8_t { Const, Var, Mul, Inv };
  struct Node {
    Op op;
    int32_t a = -1;  // Const: element, Var: variable id, Mul/Inv: node ref
    int32_t b = -1;  // Mul: right node ref
  };

  GroupPolynomial(GroupPtr group, std::vector<Node> nodes, int root,
                  int var_arity = -1);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }
  int var_arity() const { return var_arity_; }

  Elem evaluate(std::span<const Elem> assignment) const;
  Elem evaluate(const std::vector<Elem>& assignment) const;

  BigInt flat_length() const;

 private:
  GroupPtr group_;
  std::vector<Node> nodes_;
  int root_;
  int var_arity_;
};

// Hash-consing builder: identical (op, operands) triples map to one node,
// so construction order alone determines the serialized form.
class PolyBuilder {
 public:
  explicit PolyBuilder(GroupPtr group);

  int constant(Elem e);
  int var(int id);
  int mul(int a, int b);
  int inv(int a);
  int commutator(int x, int y);                      // [x,y]
  int iterated_commutator(int x, int y, int count);  // [x, count y]

  const FiniteGroup& group() const { return *group_; }
  GroupPolynomial take(int root, int var_arity = -1);

 private:
  int intern(GroupPolynomial::Node node);

  GroupPtr group_;
  std::vector<GroupPolynomial::Node> nodes_;
  std::unordered_map<uint64_t, std::vector<int>> buckets_;
};

/// Composition: variable i of p is replaced by map[i]. All map entries
/// must live over p's group and share one variable space.
GroupPolynomial substitute(const GroupPolynomial& p,
                           const std::vector<GroupPolynomial>& map);

struct FlatLetter {
  bool is_const;
  int value;  // element index, or variable id
  int sign;   // +1 / -1, meaningful for variables
};

struct FlatWord {
  GroupPtr group;
  std::vector<FlatLetter> letters;

  Elem evaluate(std::span<const Elem> assignment) const;
};

/// Materializes the word; throws CapExceeded if flat_length > cap.
FlatWord flatten(const GroupPolynomial& p, uint64_t cap);

double log2_of(const BigInt& v);

// q-star(k): z wrapped in k layers of omega-fold iterated commutators
// with fresh variables; variables (z, x_1..x_k). q(k) adds a final layer
// with variable w: variables (z, x_1..x_k, w).
GroupPolynomial build_qstar(GroupPtr group, int omega, int k);
GroupPolynomial build_q(GroupPtr group, int omega, int k);
// D(x, y1, y2, y3) = x * qstar3(x, y1, y2, y3)^-1 with the qstar3 subterm
// shared.
GroupPolynomial build_D(GroupPtr group, int omega);

// SLP text format, one node per line:
//   t<i> = CONST g<e> | t<i> = VAR x<v> | t<i> = MUL t<a> t<b>
//   | t<i> = INV t<a>
// and a final "ROOT t<r>" line. Node indices are strictly increasing.
std::string slp_to_text(const GroupPolynomial& p);
GroupPolynomial slp_from_text(const std::string& text, GroupPtr group,
                              int var_arity = -1);

}  // namespace fitgadget
