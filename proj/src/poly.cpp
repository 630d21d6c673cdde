#include "fitgadget/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fitgadget/errors.hpp"

namespace fitgadget {

GroupPolynomial::GroupPolynomial(GroupPtr group, std::vector<Node> nodes,
                                 int root, int var_arity)
    : group_(std::move(group)), nodes_(std::move(nodes)), root_(root) {
  require(root_ >= 0 && root_ < static_cast<int>(nodes_.size()),
          ErrorKind::InvalidInput, "root out of range");
  int max_var = -1;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const Node& nd = nodes_[i];
    switch (nd.op) {
      case Op::Const:
        group_->check_index(nd.a);
        break;
      case Op::Var:
        require(nd.a >= 0, ErrorKind::InvalidInput, "negative variable id");
        max_var = std::max(max_var, nd.a);
        break;
      case Op::Mul:
        require(nd.a >= 0 && nd.a < static_cast<int>(i) && nd.b >= 0 &&
                    nd.b < static_cast<int>(i),
                ErrorKind::InvalidInput, "forward reference in node list");
        break;
      case Op::Inv:
        require(nd.a >= 0 && nd.a < static_cast<int>(i),
                ErrorKind::InvalidInput, "forward reference in node list");
        break;
    }
  }
  var_arity_ = var_arity < 0 ? max_var + 1 : var_arity;
  require(var_arity_ > max_var, ErrorKind::ArityMismatch,
          "declared arity below the largest variable id");
}

Elem GroupPolynomial::evaluate(std::span<const Elem> assignment) const {
  require(static_cast<int>(assignment.size()) == var_arity_,
          ErrorKind::ArityMismatch,
          "assignment length " + std::to_string(assignment.size()) +
              " for arity " + std::to_string(var_arity_));
  std::vector<Elem> vals(nodes_.size());
  const FiniteGroup& g = *group_;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const Node& nd = nodes_[i];
    switch (nd.op) {
      case Op::Const: vals[i] = nd.a; break;
      case Op::Var: vals[i] = assignment[nd.a]; break;
      case Op::Mul: vals[i] = g.mul(vals[nd.a], vals[nd.b]); break;
      case Op::Inv: vals[i] = g.inv(vals[nd.a]); break;
    }
  }
  return vals[root_];
}

Elem GroupPolynomial::evaluate(const std::vector<Elem>& assignment) const {
  return evaluate(std::span<const Elem>(assignment));
}

BigInt GroupPolynomial::flat_length() const {
  std::vector<BigInt> len(nodes_.size());
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const Node& nd = nodes_[i];
    switch (nd.op) {
      case Op::Const:
      case Op::Var: len[i] = 1; break;
      case Op::Mul: len[i] = len[nd.a] + len[nd.b]; break;
      // inverting a word reverses it and inverts each letter; an inverse
      // variable is itself a single letter
      case Op::Inv: len[i] = len[nd.a]; break;
    }
  }
  return len[root_];
}

PolyBuilder::PolyBuilder(GroupPtr group) : group_(std::move(group)) {}

int PolyBuilder::intern(GroupPolynomial::Node node) {
  uint64_t key = (static_cast<uint64_t>(node.op) << 60) ^
                 (static_cast<uint64_t>(static_cast<uint32_t>(node.a)) << 29) ^
                 static_cast<uint64_t>(static_cast<uint32_t>(node.b));
  auto& bucket = buckets_[key];
  for (int id : bucket) {
    const auto& nd = nodes_[id];
    if (nd.op == node.op && nd.a == node.a && nd.b == node.b) return id;
  }
  int id = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  bucket.push_back(id);
  return id;
}

int PolyBuilder::constant(Elem e) {
  group_->check_index(e);
  return intern({GroupPolynomial::Op::Const, e, -1});
}

int PolyBuilder::var(int id) {
  require(id >= 0, ErrorKind::InvalidInput, "negative variable id");
  return intern({GroupPolynomial::Op::Var, id, -1});
}

int PolyBuilder::mul(int a, int b) {
  return intern({GroupPolynomial::Op::Mul, a, b});
}

int PolyBuilder::inv(int a) {
  return intern({GroupPolynomial::Op::Inv, a, -1});
}

int PolyBuilder::commutator(int x, int y) {
  // sequenced explicitly: C++ argument order is unspecified and node
  // order determines the serialized form
  int ix = inv(x);
  int iy = inv(y);
  int a = mul(ix, iy);
  int b = mul(a, x);
  return mul(b, y);
}

int PolyBuilder::iterated_commutator(int x, int y, int count) {
  int cur = x;
  for (int i = 0; i < count; ++i) cur = commutator(cur, y);
  return cur;
}

GroupPolynomial PolyBuilder::take(int root, int var_arity) {
  return GroupPolynomial(group_, nodes_, root, var_arity);
}

GroupPolynomial substitute(const GroupPolynomial& p,
                           const std::vector<GroupPolynomial>& map) {
  require(static_cast<int>(map.size()) == p.var_arity(),
          ErrorKind::ArityMismatch, "substitution map must cover every variable");
  int inner_arity = 0;
  for (const auto& q : map) {
    bool same = q.group_ptr() == p.group_ptr() || q.group().same_table(p.group());
    require(same, ErrorKind::GroupMismatch,
            "substituted polynomial lives over a different group");
    inner_arity = std::max(inner_arity, q.var_arity());
  }

  PolyBuilder b(p.group_ptr());
  // import each mapped polynomial once; hash-consing shares overlap
  std::vector<int> entry_root(map.size());
  for (size_t e = 0; e < map.size(); ++e) {
    const auto& q = map[e];
    std::vector<int> remap(q.nodes().size());
    for (size_t i = 0; i < q.nodes().size(); ++i) {
      const auto& nd = q.nodes()[i];
      switch (nd.op) {
        case GroupPolynomial::Op::Const: remap[i] = b.constant(nd.a); break;
        case GroupPolynomial::Op::Var: remap[i] = b.var(nd.a); break;
        case GroupPolynomial::Op::Mul:
          remap[i] = b.mul(remap[nd.a], remap[nd.b]);
          break;
        case GroupPolynomial::Op::Inv: remap[i] = b.inv(remap[nd.a]); break;
      }
    }
    entry_root[e] = remap[q.root()];
  }

  std::vector<int> remap(p.nodes().size());
  for (size_t i = 0; i < p.nodes().size(); ++i) {
    const auto& nd = p.nodes()[i];
    switch (nd.op) {
      case GroupPolynomial::Op::Const: remap[i] = b.constant(nd.a); break;
      case GroupPolynomial::Op::Var: remap[i] = entry_root[nd.a]; break;
      case GroupPolynomial::Op::Mul:
        remap[i] = b.mul(remap[nd.a], remap[nd.b]);
        break;
      case GroupPolynomial::Op::Inv: remap[i] = b.inv(remap[nd.a]); break;
    }
  }
  return b.take(remap[p.root()], inner_arity);
}

Elem FlatWord::evaluate(std::span<const Elem> assignment) const {
  const FiniteGroup& g = *group;
  Elem acc = g.identity();
  for (const auto& l : letters) {
    Elem v = l.is_const ? l.value : assignment[l.value];
    if (!l.is_const && l.sign < 0) v = g.inv(v);
    acc = g.mul(acc, v);
  }
  return acc;
}

FlatWord flatten(const GroupPolynomial& p, uint64_t cap) {
  BigInt len = p.flat_length();
  require(len <= BigInt(cap), ErrorKind::CapExceeded,
          "flat length " + len.str() + " exceeds cap " + std::to_string(cap));
  FlatWord out;
  out.group = p.group_ptr();
  out.letters.reserve(static_cast<size_t>(len));
  // explicit stack: (node, inverted)
  std::vector<std::pair<int, bool>> stack{{p.root(), false}};
  const auto& nodes = p.nodes();
  const FiniteGroup& g = p.group();
  while (!stack.empty()) {
    auto [id, invd] = stack.back();
    stack.pop_back();
    const auto& nd = nodes[id];
    switch (nd.op) {
      case GroupPolynomial::Op::Const:
        out.letters.push_back({true, invd ? g.inv(nd.a) : nd.a, +1});
        break;
      case GroupPolynomial::Op::Var:
        out.letters.push_back({false, nd.a, invd ? -1 : +1});
        break;
      case GroupPolynomial::Op::Mul:
        // stack is LIFO: push the later-emitted child first
        if (!invd) {
          stack.push_back({nd.b, false});
          stack.push_back({nd.a, false});
        } else {
          stack.push_back({nd.a, true});
          stack.push_back({nd.b, true});
        }
        break;
      case GroupPolynomial::Op::Inv:
        stack.push_back({nd.a, !invd});
        break;
    }
  }
  return out;
}

double log2_of(const BigInt& v) {
  if (v <= 0) return 0.0;
  unsigned bits = boost::multiprecision::msb(v);
  if (bits <= 62)
    return std::log2(static_cast<double>(v.convert_to<uint64_t>()));
  BigInt top = v >> (bits - 62);
  return std::log2(static_cast<double>(top.convert_to<uint64_t>())) +
         static_cast<double>(bits - 62);
}

GroupPolynomial build_qstar(GroupPtr group, int omega, int k) {
  require(k >= 0 && omega >= 1, ErrorKind::InvalidInput,
          "need k >= 0 and omega >= 1");
  PolyBuilder b(std::move(group));
  int cur = b.var(0);
  for (int j = 1; j <= k; ++j)
    cur = b.iterated_commutator(cur, b.var(j), omega);
  return b.take(cur, k + 1);
}

GroupPolynomial build_q(GroupPtr group, int omega, int k) {
  return build_qstar(std::move(group), omega, k + 1);
}

GroupPolynomial build_D(GroupPtr group, int omega) {
  PolyBuilder b(std::move(group));
  int x = b.var(0);
  int cur = x;
  for (int j = 1; j <= 3; ++j)
    cur = b.iterated_commutator(cur, b.var(j), omega);
  return b.take(b.mul(x, b.inv(cur)), 4);
}

std::string slp_to_text(const GroupPolynomial& p) {
  std::ostringstream out;
  const auto& nodes = p.nodes();
  for (size_t i = 0; i < nodes.size(); ++i) {
    const auto& nd = nodes[i];
    out << "t" << i << " = ";
    switch (nd.op) {
      case GroupPolynomial::Op::Const: out << "CONST g" << nd.a; break;
      case GroupPolynomial::Op::Var: out << "VAR x" << nd.a; break;
      case GroupPolynomial::Op::Mul:
        out << "MUL t" << nd.a << " t" << nd.b;
        break;
      case GroupPolynomial::Op::Inv: out << "INV t" << nd.a; break;
    }
    out << "\n";
  }
  out << "ROOT t" << p.root() << "\n";
  return out.str();
}

namespace {

int parse_ref(const std::string& tok, char prefix, int bound,
              const char* what) {
  require(tok.size() >= 2 && tok[0] == prefix, ErrorKind::InvalidInput,
          std::string("expected ") + what + ", got '" + tok + "'");
  int v = -1;
  try {
    size_t used = 0;
    v = std::stoi(tok.substr(1), &used);
    require(used + 1 == tok.size(), ErrorKind::InvalidInput,
            "trailing junk in '" + tok + "'");
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidInput, "bad number in '" + tok + "'");
  }
  require(v >= 0 && (bound < 0 || v < bound), ErrorKind::InvalidInput,
          std::string(what) + " out of range in '" + tok + "'");
  return v;
}

}  // namespace

GroupPolynomial slp_from_text(const std::string& text, GroupPtr group,
                              int var_arity) {
  std::istringstream in(text);
  std::vector<GroupPolynomial::Node> nodes;
  std::string line;
  int root = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "ROOT") {
      std::string tok;
      ls >> tok;
      root = parse_ref(tok, 't', static_cast<int>(nodes.size()), "node ref");
      break;
    }
    int id = parse_ref(head, 't', -1, "node id");
    require(id == static_cast<int>(nodes.size()), ErrorKind::InvalidInput,
            "node indices must be consecutive from t0");
    std::string eq, op;
    ls >> eq >> op;
    require(eq == "=", ErrorKind::InvalidInput, "expected '=' in SLP line");
    GroupPolynomial::Node nd{};
    std::string ta, tb;
    if (op == "CONST") {
      ls >> ta;
      nd = {GroupPolynomial::Op::Const,
            parse_ref(ta, 'g', group->order(), "element"), -1};
    } else if (op == "VAR") {
      ls >> ta;
      nd = {GroupPolynomial::Op::Var, parse_ref(ta, 'x', -1, "variable"), -1};
    } else if (op == "MUL") {
      ls >> ta >> tb;
      nd = {GroupPolynomial::Op::Mul, parse_ref(ta, 't', id, "node ref"),
            parse_ref(tb, 't', id, "node ref")};
    } else if (op == "INV") {
      ls >> ta;
      nd = {GroupPolynomial::Op::Inv, parse_ref(ta, 't', id, "node ref"), -1};
    } else {
      fail(ErrorKind::InvalidInput, "unknown SLP op '" + op + "'");
    }
    nodes.push_back(nd);
  }
  require(root >= 0, ErrorKind::InvalidInput, "SLP has no ROOT line");
  return GroupPolynomial(std::move(group), std::move(nodes), root, var_arity);
}

}  // namespace fitgadget
