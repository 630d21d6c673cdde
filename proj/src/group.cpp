#include "fitgadget/group.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "fitgadget/errors.hpp"
#include "json.hpp"

namespace fitgadget {

using nlohmann::json;

Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  require(degree >= 1, ErrorKind::InvalidInput, "degree must be positive");
  Perm p = perm_identity(degree);
  std::vector<uint8_t> seen(degree, 0);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      require(a >= 1 && a <= degree, ErrorKind::InvalidInput,
              "cycle entry out of 1..degree");
      require(!seen[a - 1], ErrorKind::InvalidInput,
              "cycles within one generator must be disjoint");
      seen[a - 1] = 1;
      p[a - 1] = b - 1;
    }
  }
  return p;
}

std::string perm_cycle_label(const Perm& p) {
  std::string out;
  std::vector<uint8_t> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

constexpr int kAssociativityCheckCap = 1000;

void validate_table(const std::vector<int>& mul, int n, int* identity_out,
                    std::vector<int>* inv_out) {
  for (int i = 0; i < n * n; ++i)
    require(mul[i] >= 0 && mul[i] < n, ErrorKind::IndexOutOfRange,
            "table entry out of range");

  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = mul[cand * n + a] == a && mul[a * n + cand] == a;
    if (ok) e = cand;
  }
  require(e >= 0, ErrorKind::NoIdentity, "no two-sided identity");
  *identity_out = e;

  inv_out->assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul[a * n + b] == e && mul[b * n + a] == e) {
        (*inv_out)[a] = b;
        break;
      }
    }
    require((*inv_out)[a] >= 0, ErrorKind::MissingInverse,
            "element " + std::to_string(a) + " has no two-sided inverse");
  }

  // rows and columns are permutations
  for (int a = 0; a < n; ++a) {
    std::vector<uint8_t> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      row[mul[a * n + b]] = 1;
      col[mul[b * n + a]] = 1;
    }
    for (int b = 0; b < n; ++b)
      require(row[b] && col[b], ErrorKind::NonAssociativeTable,
              "row/column is not a permutation");
  }

  // full associativity only at desk scale; generated groups are
  // associative by construction
  if (n <= kAssociativityCheckCap) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = mul[a * n + b];
        for (int c = 0; c < n; ++c)
          require(mul[ab * n + c] == mul[a * n + mul[b * n + c]],
                  ErrorKind::NonAssociativeTable,
                  "associativity fails at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
      }
  }
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul, std::string source,
                         std::vector<std::string> labels, std::string name)
    : source_(std::move(source)) {
  order_ = static_cast<int>(mul.size());
  require(order_ >= 1, ErrorKind::InvalidInput, "empty multiplication table");
  mul_.resize(static_cast<size_t>(order_) * order_);
  for (int i = 0; i < order_; ++i) {
    require(static_cast<int>(mul[i].size()) == order_, ErrorKind::InvalidInput,
            "multiplication table is not square");
    std::copy(mul[i].begin(), mul[i].end(), mul_.begin() + i * order_);
  }
  validate_table(mul_, order_, &identity_, &inv_);
  if (labels.empty()) {
    labels_.resize(order_);
    for (int i = 0; i < order_; ++i) labels_[i] = std::to_string(i);
  } else {
    require(static_cast<int>(labels.size()) == order_, ErrorKind::InvalidInput,
            "label count does not match order");
    labels_ = std::move(labels);
  }
  name_ = std::move(name);
}

Elem FiniteGroup::conj(Elem x, Elem y) const {
  return mul(mul(inv(y), x), y);
}

Elem FiniteGroup::commutator(Elem x, Elem y) const {
  return mul(mul(mul(inv(x), inv(y)), x), y);
}

Elem FiniteGroup::iterated_commutator(Elem x, Elem y, int k) const {
  Elem cur = x;
  for (int i = 0; i < k; ++i) cur = commutator(cur, y);
  return cur;
}

Elem FiniteGroup::power(Elem x, long long e) const {
  Elem acc = identity_;
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  for (long long i = 0; i < e; ++i) acc = mul(acc, x);
  return acc;
}

void FiniteGroup::check_index(Elem x) const {
  require(x >= 0 && x < order_, ErrorKind::IndexOutOfRange,
          "element index " + std::to_string(x));
}

std::optional<Elem> FiniteGroup::find_label(const std::string& label) const {
  for (int i = 0; i < order_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::vector<std::vector<int>> FiniteGroup::mul_rows() const {
  std::vector<std::vector<int>> rows(order_);
  for (int i = 0; i < order_; ++i)
    rows[i].assign(mul_.begin() + i * order_, mul_.begin() + (i + 1) * order_);
  return rows;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return order_ == other.order_ && mul_ == other.mul_;
}

GroupPtr group_from_table(std::vector<std::vector<int>> mul,
                          std::vector<std::string> labels, std::string name) {
  return std::make_shared<FiniteGroup>(std::move(mul), "table",
                                       std::move(labels), std::move(name));
}

GroupPtr group_from_permutations(const PermSpec& spec, int closure_cap,
                                 std::string name) {
  require(!spec.generators.empty(), ErrorKind::InvalidInput,
          "no generators given");
  std::vector<Perm> gens;
  for (const auto& cycles : spec.generators)
    gens.push_back(perm_from_cycles(spec.degree, cycles));

  // BFS closure from the identity; discovery order fixes the indexing
  std::vector<Perm> elems{perm_identity(spec.degree)};
  std::map<Perm, int> index{{elems[0], 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Perm next = perm_compose(elems[head], g);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        require(static_cast<int>(elems.size()) <= closure_cap,
                ErrorKind::ClosureCapExceeded,
                "generator closure exceeds cap " +
                    std::to_string(closure_cap));
      }
    }
  }

  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = perm_cycle_label(elems[i]);
    for (int j = 0; j < n; ++j)
      mul[i][j] = index.at(perm_compose(elems[i], elems[j]));
  }
  return std::make_shared<FiniteGroup>(std::move(mul), "permutation_generators",
                                       std::move(labels), std::move(name));
}

namespace {

GroupPtr cyclic_group(int n) {
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : "g^" + std::to_string(i);
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  return std::make_shared<FiniteGroup>(std::move(mul), "builtin",
                                       std::move(labels), "C" + std::to_string(n));
}

// order 2n: indices 0..n-1 are rotations r^k, n..2n-1 reflections s r^k
GroupPtr dihedral_group(int n) {
  int m = 2 * n;
  auto compose = [n](int x, int y) {
    bool xr = x >= n, yr = y >= n;
    int a = x % n, b = y % n;
    if (!xr && !yr) return (a + b) % n;
    if (!xr && yr) return (b + a) % n + n;
    if (xr && !yr) return (a - b + n) % n + n;
    return (a - b + n) % n;
  };
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = i == 0          ? "e"
                : i < n         ? "r^" + std::to_string(i)
                : i == n        ? "s"
                                : "s r^" + std::to_string(i - n);
    for (int j = 0; j < m; ++j) mul[i][j] = compose(i, j);
  }
  return std::make_shared<FiniteGroup>(std::move(mul), "builtin",
                                       std::move(labels), "D" + std::to_string(n));
}

GroupPtr symmetric_group(int n) {
  PermSpec spec;
  spec.degree = n;
  spec.generators.push_back({{1, 2}});
  if (n >= 3) {
    std::vector<int> big(n);
    for (int i = 0; i < n; ++i) big[i] = i + 1;
    spec.generators.push_back({big});
  }
  auto g = group_from_permutations(spec, kDefaultClosureCap,
                                   "S" + std::to_string(n));
  return g;
}

GroupPtr alternating_4() {
  PermSpec spec;
  spec.degree = 4;
  spec.generators = {{{1, 2, 3}}, {{1, 2}, {3, 4}}};
  return group_from_permutations(spec, kDefaultClosureCap, "A4");
}

// (C3 x C3) semidirect D4, where D4 = <a,b | a^2 = b^2 = (ab)^4 = 1> acts
// with a swapping the two C3 components and b inverting the second one.
// The point group is realized by the eight 2x2 matrices over F3 generated
// by the swap and diag(1,-1); group elements are pairs (v, M) with
// (v1,M1)(v2,M2) = (v1 + M1 v2, M1 M2). Labels use additive notation for
// the C3 x C3 part.
GroupPtr remark72_group() {
  using Mat = std::array<int, 4>;  // row-major 2x2 over F3
  auto mat_mul = [](const Mat& A, const Mat& B) {
    Mat C;
    C[0] = (A[0] * B[0] + A[1] * B[2]) % 3;
    C[1] = (A[0] * B[1] + A[1] * B[3]) % 3;
    C[2] = (A[2] * B[0] + A[3] * B[2]) % 3;
    C[3] = (A[2] * B[1] + A[3] * B[3]) % 3;
    return C;
  };
  auto mat_apply = [](const Mat& A, int v) {
    int x = v / 3, y = v % 3;
    int nx = (A[0] * x + A[1] * y) % 3;
    int ny = (A[2] * x + A[3] * y) % 3;
    return nx * 3 + ny;
  };

  const Mat I{1, 0, 0, 1};
  const Mat S{0, 1, 1, 0};      // swap: generator a
  const Mat T{1, 0, 0, 2};      // invert second component: generator b
  std::vector<Mat> mats{I};
  std::vector<std::string> words{"1"};
  std::vector<std::pair<Mat, std::string>> gens{{S, "a"}, {T, "b"}};
  for (size_t head = 0; head < mats.size(); ++head) {
    for (const auto& [g, gname] : gens) {
      Mat next = mat_mul(mats[head], g);
      if (std::find(mats.begin(), mats.end(), next) == mats.end()) {
        mats.push_back(next);
        words.push_back(words[head] == "1" ? gname : words[head] + gname);
      }
    }
  }
  int q = static_cast<int>(mats.size());  // 8
  int n = 9 * q;

  auto mat_index = [&](const Mat& A) {
    return static_cast<int>(std::find(mats.begin(), mats.end(), A) -
                            mats.begin());
  };
  auto vec_add = [](int u, int v) {
    return ((u / 3 + v / 3) % 3) * 3 + (u % 3 + v % 3) % 3;
  };

  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  // index = 9 * matrix-index + (3x + y)
  for (int i = 0; i < n; ++i) {
    int ti = i / 9, vi = i % 9;
    std::string vlabel =
        "(" + std::to_string(vi / 3) + "," + std::to_string(vi % 3) + ")";
    if (vi == 0)
      labels[i] = words[ti];
    else if (ti == 0)
      labels[i] = vlabel;
    else
      labels[i] = vlabel + words[ti];
    for (int j = 0; j < n; ++j) {
      int tj = j / 9, vj = j % 9;
      int v = vec_add(vi, mat_apply(mats[ti], vj));
      int t = mat_index(mat_mul(mats[ti], mats[tj]));
      mul[i][j] = 9 * t + v;
    }
  }
  return std::make_shared<FiniteGroup>(std::move(mul), "builtin",
                                       std::move(labels), "remark72");
}

GroupPtr builtin_atom(const std::string& name) {
  auto numeric_suffix = [&](size_t at) -> std::optional<int> {
    if (at >= name.size()) return std::nullopt;
    for (size_t i = at; i < name.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    return std::stoi(name.substr(at));
  };
  if (name == "remark72") return remark72_group();
  if (name == "A4") return alternating_4();
  if (!name.empty() && name[0] == 'C') {
    if (auto n = numeric_suffix(1); n && *n >= 1) return cyclic_group(*n);
  }
  if (!name.empty() && name[0] == 'D') {
    if (auto n = numeric_suffix(1); n && *n >= 1) return dihedral_group(*n);
  }
  if (!name.empty() && name[0] == 'S') {
    if (auto n = numeric_suffix(1); n && *n >= 2 && *n <= 5)
      return symmetric_group(*n);
  }
  fail(ErrorKind::UnknownBuiltin, "no builtin group named '" + name + "'");
}

}  // namespace

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  int na = a->order(), nb = b->order(), n = na * nb;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    int ai = i / nb, bi = i % nb;
    labels[i] = "(" + a->label(ai) + "," + b->label(bi) + ")";
    for (int j = 0; j < n; ++j) {
      int aj = j / nb, bj = j % nb;
      mul[i][j] = a->mul(ai, aj) * nb + b->mul(bi, bj);
    }
  }
  std::string name = a->name() + "x" + b->name();
  return std::make_shared<FiniteGroup>(std::move(mul), "builtin",
                                       std::move(labels), name);
}

GroupPtr group_builtin(const std::string& name) {
  // 'x' composes direct products of catalog members, e.g. "C2xS4"
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  GroupPtr g = builtin_atom(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i)
    g = direct_product(g, builtin_atom(parts[i]));
  return g;
}

GroupPtr group_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("bad group JSON: ") + e.what());
  }
  int forms = doc.contains("builtin") + doc.contains("permutation_generators") +
              doc.contains("cayley_table");
  require(forms == 1, ErrorKind::InvalidInput,
          "group file needs exactly one of builtin / permutation_generators / "
          "cayley_table");
  try {
    std::string name = doc.value("name", std::string());
    std::vector<std::string> labels;
    if (doc.contains("labels"))
      labels = doc["labels"].get<std::vector<std::string>>();

    if (doc.contains("builtin")) {
      auto g = group_builtin(doc["builtin"].get<std::string>());
      if (!name.empty() || !labels.empty())
        return std::make_shared<FiniteGroup>(
            g->mul_rows(), g->source(),
            labels.empty() ? g->labels() : labels,
            name.empty() ? g->name() : name);
      return g;
    }
    if (doc.contains("permutation_generators")) {
      const auto& pg = doc["permutation_generators"];
      PermSpec spec;
      spec.degree = pg.at("degree").get<int>();
      spec.generators =
          pg.at("generators")
              .get<std::vector<std::vector<std::vector<int>>>>();
      auto g = group_from_permutations(spec, kDefaultClosureCap, name);
      if (!labels.empty())
        return std::make_shared<FiniteGroup>(g->mul_rows(), g->source(),
                                             labels, name);
      return g;
    }
    const auto& ct = doc["cayley_table"];
    auto mul = ct.at("mul").get<std::vector<std::vector<int>>>();
    require(ct.at("order").get<int>() == static_cast<int>(mul.size()),
            ErrorKind::InvalidInput, "cayley_table order mismatch");
    return std::make_shared<FiniteGroup>(std::move(mul), "table",
                                         std::move(labels), std::move(name));
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("bad group JSON: ") + e.what());
  }
}

GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::InvalidInput, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return group_from_json_text(buf.str());
}

std::string group_to_json_text(const FiniteGroup& g) {
  json doc;
  doc["cayley_table"] = {{"order", g.order()}, {"mul", g.mul_rows()}};
  doc["labels"] = g.labels();
  if (!g.name().empty()) doc["name"] = g.name();
  return doc.dump(1) + "\n";
}

void save_group_file(const FiniteGroup& g, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), ErrorKind::InvalidInput, "cannot write " + path);
  out << group_to_json_text(g);
}

bool is_subgroup(const FiniteGroup& g, const ElemSet& s) {
  if (!s.test(g.identity())) return false;
  auto mem = s.members();
  for (int a : mem) {
    if (!s.test(g.inv(a))) return false;
    for (int b : mem)
      if (!s.test(g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const ElemSet& s) {
  if (!is_subgroup(g, s)) return false;
  for (int a : s.members())
    for (int y = 0; y < g.order(); ++y)
      if (!s.test(g.conj(a, y))) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

QuotientResult quotient_group(const FiniteGroup& g, const ElemSet& normal) {
  require(is_normal(g, normal), ErrorKind::NotNormal,
          "quotient by a non-normal subset");
  int n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;  // smallest element of each coset, ascending
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : normal.members()) coset_of[g.mul(x, h)] = c;
    // left and right cosets agree for a normal subgroup
  }
  int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> mul(q, std::vector<int>(q));
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) {
    labels[i] = "[" + g.label(reps[i]) + "]";
    for (int j = 0; j < q; ++j) mul[i][j] = coset_of[g.mul(reps[i], reps[j])];
  }
  auto qg = std::make_shared<FiniteGroup>(
      std::move(mul), "quotient(" + g.name() + ")", std::move(labels),
      g.name().empty() ? "" : g.name() + "/N");
  return {qg, std::move(coset_of)};
}

SubgroupResult subgroup_as_group(const FiniteGroup& g, const ElemSet& members) {
  require(is_subgroup(g, members), ErrorKind::InvalidInput,
          "subset is not a subgroup");
  std::vector<int> to_parent = members.members();
  std::vector<int> from_parent(g.order(), -1);
  for (size_t i = 0; i < to_parent.size(); ++i)
    from_parent[to_parent[i]] = static_cast<int>(i);
  int n = static_cast<int>(to_parent.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = g.label(to_parent[i]);
    for (int j = 0; j < n; ++j)
      mul[i][j] = from_parent[g.mul(to_parent[i], to_parent[j])];
  }
  auto sg = std::make_shared<FiniteGroup>(
      std::move(mul), "subgroup(" + g.name() + ")", std::move(labels),
      g.name().empty() ? "" : g.name() + ".sub");
  return {sg, std::move(to_parent), std::move(from_parent)};
}

}  // namespace fitgadget
