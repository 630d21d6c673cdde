#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "fitgadget/errors.hpp"
#include "fitgadget/group.hpp"
#include "fitgadget/rng.hpp"
#include "fitgadget/structure.hpp"

using namespace fitgadget;

namespace {

ElemSet intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet out(a.size());
  for (int i = 0; i < a.size(); ++i)
    if (a.test(i) && b.test(i)) out.set(i);
  return out;
}

// independent Fitting oracle: join of all nilpotent members of the lattice
ElemSet fitting_by_lattice(const FiniteGroup& g) {
  ElemSet fit = trivial_subgroup(g);
  for (const auto& n : all_normal_subgroups(g))
    if (is_nilpotent_subgroup(g, n)) fit = subgroup_product(g, fit, n);
  return fit;
}

// brute-force scan of every subset (order <= ~16 only)
std::vector<ElemSet> all_normal_subgroups_bruteforce(const FiniteGroup& g) {
  std::vector<ElemSet> out;
  int n = g.order();
  for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
    ElemSet s(n);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.set(i);
    if (s.count() >= 1 && is_normal(g, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lattice_less);
  return out;
}

}  // namespace

TEST_CASE("subgroup closure") {
  auto g = group_builtin("S4");
  CHECK(subgroup_closure(*g, trivial_subgroup(*g)) == trivial_subgroup(*g));
  CHECK(subgroup_closure(*g, ElemSet::full(24)) == ElemSet::full(24));

  // two double transpositions generate the Klein group
  auto dt1 = g->find_label("(1 2)(3 4)");
  auto dt2 = g->find_label("(1 3)(2 4)");
  REQUIRE(dt1.has_value());
  REQUIRE(dt2.has_value());
  ElemSet seed(24);
  seed.set(*dt1);
  seed.set(*dt2);
  ElemSet v4 = subgroup_closure(*g, seed);
  CHECK(v4.count() == 4);
  CHECK(is_normal(*g, v4));
}

TEST_CASE("normal closure") {
  auto g = group_builtin("S4");
  CHECK(normal_closure(*g, trivial_subgroup(*g)) == trivial_subgroup(*g));
  auto c3 = g->find_label("(1 2 3)");
  REQUIRE(c3.has_value());
  ElemSet a4 = normal_closure_of(*g, *c3);
  CHECK(a4.count() == 12);
  CHECK(is_normal(*g, a4));
}

TEST_CASE("commutator subgroups and the derived chain of S4") {
  auto g = group_builtin("S4");
  ElemSet full = ElemSet::full(24);
  ElemSet triv = trivial_subgroup(*g);
  CHECK(commutator_subgroup(*g, full, triv) == triv);

  ElemSet a4 = commutator_subgroup(*g, full, full);
  CHECK(a4.count() == 12);
  ElemSet v4 = commutator_subgroup(*g, a4, a4);
  CHECK(v4.count() == 4);

  auto lattice = all_normal_subgroups(*g);
  for (const auto& k1 : lattice)
    for (const auto& k2 : lattice) {
      ElemSet c12 = commutator_subgroup(*g, k1, k2);
      CHECK(c12 == commutator_subgroup(*g, k2, k1));
      CHECK(intersect(k1, k2).contains(c12));
      // product rule [K1K2, N] = [K1,N][K2,N]
      for (const auto& n : lattice) {
        ElemSet lhs = commutator_subgroup(*g, subgroup_product(*g, k1, k2), n);
        ElemSet rhs = subgroup_product(*g, commutator_subgroup(*g, k1, n),
                                       commutator_subgroup(*g, k2, n));
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("lower central series and nilpotency") {
  auto c12 = group_builtin("C12");
  auto lcs = lower_central_series(*c12);
  CHECK(lcs.residual().count() == 1);
  CHECK(is_nilpotent(*c12));

  auto s4 = group_builtin("S4");
  auto lcs4 = lower_central_series(*s4);
  CHECK(lcs4.terms[1].count() == 12);
  CHECK(lcs4.residual().count() == 12);
  CHECK(lcs4.residual_index == 1);
  CHECK(!is_nilpotent(*s4));

  auto d15 = group_builtin("D15");
  auto lcsd = lower_central_series(*d15);
  CHECK(lcsd.residual().count() == 15);
  CHECK(!is_nilpotent(*d15));
  CHECK(is_nilpotent_subgroup(*d15, lcsd.residual()));
}

TEST_CASE("omega: abelian groups and the S4 regression value") {
  for (const char* name : {"C7", "C2xC4"}) {
    auto g = group_builtin(name);
    auto om = compute_omega(*g);
    CHECK(om.omega == 1);
  }

  auto s4 = group_builtin("S4");
  auto om = compute_omega(*s4);
  CHECK(om.omega == 6);  // regression fixture
  CHECK(om.k0 <= om.omega);

  // past omega the element-pair sequences repeat with period omega
  for (int x = 0; x < 24; ++x)
    for (int y = 0; y < 24; ++y)
      for (int i = om.omega; i < om.omega + 3; ++i)
        CHECK(s4->iterated_commutator(x, y, i) ==
              s4->iterated_commutator(x, y, i + om.omega));
}

TEST_CASE("omega is at most |G|! on small catalog groups") {
  for (const char* name : {"C4", "S3", "D4", "A4", "S4"}) {
    auto g = group_builtin(name);
    long long fact = 1;
    bool overflow = false;
    for (int i = 2; i <= g->order(); ++i) {
      if (fact > (1ll << 55) / i) {
        overflow = true;
        break;
      }
      fact *= i;
    }
    auto om = compute_omega(*g);
    if (!overflow) CHECK(static_cast<long long>(om.omega) <= fact);
    else CHECK(om.omega <= 1000);  // far below |G|! in every real case
  }
}

TEST_CASE("Baer's formula matches the lattice Fitting oracle") {
  for (const char* name :
       {"C6", "S3", "D4", "D15", "A4", "S4", "C2xS3", "remark72"}) {
    auto g = group_builtin(name);
    CHECK(fitting_subgroup(*g) == fitting_by_lattice(*g));
  }
  auto s4 = group_builtin("S4");
  CHECK(fitting_subgroup(*s4).count() == 4);
  auto nil = group_builtin("C2xC4");
  CHECK(fitting_subgroup(*nil) == ElemSet::full(8));
  auto r72 = group_builtin("remark72");
  ElemSet fit72 = fitting_subgroup(*r72);
  CHECK(fit72.count() == 9);
  for (const char* lbl : {"(1,1)", "(2,2)", "(0,1)", "(1,0)"})
    CHECK(fit72.test(*r72->find_label(lbl)));
}

TEST_CASE("upper Fitting series") {
  auto nil = group_builtin("C2xC4");
  auto fs = upper_fitting_series(*nil);
  CHECK(fs.fitting_length() == 1);

  auto s4 = group_builtin("S4");
  auto fs4 = upper_fitting_series(*s4);
  CHECK(fs4.fitting_length() == 3);
  CHECK(fs4.terms[0].count() == 1);
  CHECK(fs4.terms[1].count() == 4);
  CHECK(fs4.terms[2].count() == 12);
  CHECK(fs4.terms[3].count() == 24);

  auto d15 = group_builtin("D15");
  CHECK(upper_fitting_series(*d15).fitting_length() == 2);

  auto s5 = group_builtin("S5");
  CHECK_THROWS_AS(upper_fitting_series(*s5), Error);
  try {
    upper_fitting_series(*s5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSolvable);
  }
}

TEST_CASE("normal lattice: prime cyclic, S4, and brute-force completeness") {
  auto c5 = group_builtin("C5");
  auto l5 = all_normal_subgroups(*c5);
  CHECK(l5.size() == 2);

  auto s4 = group_builtin("S4");
  auto l4 = all_normal_subgroups(*s4);
  REQUIRE(l4.size() == 4);
  CHECK(l4[0].count() == 1);
  CHECK(l4[1].count() == 4);
  CHECK(l4[2].count() == 12);
  CHECK(l4[3].count() == 24);

  for (const char* name : {"S3", "C2xS3", "D4"}) {
    auto g = group_builtin(name);
    CHECK(all_normal_subgroups(*g) == all_normal_subgroups_bruteforce(*g));
  }
}

TEST_CASE("centralizer mod a normal subgroup") {
  auto g = group_builtin("S4");
  auto lattice = all_normal_subgroups(*g);
  const ElemSet& triv = lattice[0];
  const ElemSet& v4 = lattice[1];
  const ElemSet& a4 = lattice[2];
  CHECK(centralizer_mod(*g, a4, a4) == ElemSet::full(24));
  CHECK(centralizer_mod(*g, triv, triv) == ElemSet::full(24));
  CHECK(centralizer_mod(*g, a4, v4) == a4);
  CHECK_THROWS_AS(centralizer_mod(*g, v4, a4), Error);
}

TEST_CASE("congruences of iterated commutators (left argument)") {
  // x = y mod N, g in M  =>  [x, k g] = [y, k g] mod [N, k M]
  auto run = [](const FiniteGroup& g, const ElemSet& n, const ElemSet& m,
                int two_omega) {
    std::vector<ElemSet> chain{n};
    for (int k = 1; k <= two_omega; ++k)
      chain.push_back(commutator_subgroup(g, chain.back(), m));
    for (int x = 0; x < g.order(); ++x)
      for (int h : n.members()) {
        int y = g.mul(h, x);  // same coset of N
        for (int gg : m.members())
          for (int k = 1; k <= two_omega; ++k) {
            int u = g.iterated_commutator(x, gg, k);
            int v = g.iterated_commutator(y, gg, k);
            CHECK(chain[k].test(g.mul(g.inv(u), v)));
          }
      }
  };

  auto s3 = group_builtin("S3");
  int w3 = 2 * compute_omega(*s3).omega;
  for (const auto& n : all_normal_subgroups(*s3))
    for (const auto& m : all_normal_subgroups(*s3)) run(*s3, n, m, w3);

  auto s4 = group_builtin("S4");
  auto lattice = all_normal_subgroups(*s4);
  run(*s4, lattice[1], lattice[2], 2 * compute_omega(*s4).omega);
}

TEST_CASE("congruences of iterated commutators (right arguments, sampled)") {
  // g in M, x_i = y_i mod N  =>  [g, x_1..x_n] = [g, y_1..y_n] mod [M,N]
  auto s4 = group_builtin("S4");
  auto lattice = all_normal_subgroups(*s4);
  DetRng rng(kDefaultSeed);
  for (const auto& m : lattice)
    for (const auto& n : lattice) {
      ElemSet mn = commutator_subgroup(*s4, m, n);
      auto mm = m.members();
      auto nm = n.members();
      for (int trial = 0; trial < 200; ++trial) {
        int g0 = mm[rng.below(mm.size())];
        int depth = 1 + static_cast<int>(rng.below(3));
        int u = g0, v = g0;
        for (int i = 0; i < depth; ++i) {
          int x = static_cast<int>(rng.below(24));
          int y = s4->mul(nm[rng.below(nm.size())], x);
          u = s4->commutator(u, x);
          v = s4->commutator(v, y);
        }
        CHECK(mn.test(s4->mul(s4->inv(u), v)));
      }
    }
}

TEST_CASE("centralizer elements split iterated commutators") {
  // f in C_G(N), h in N: [hf, k g] = [h, k g] [f, k g]
  auto s3 = group_builtin("S3");
  int two_omega = 2 * compute_omega(*s3).omega;
  for (const auto& n : all_normal_subgroups(*s3)) {
    ElemSet cent = centralizer_mod(*s3, n, trivial_subgroup(*s3));
    for (int f : cent.members())
      for (int h : n.members())
        for (int g = 0; g < 6; ++g)
          for (int k = 0; k <= two_omega; ++k)
            CHECK(s3->iterated_commutator(s3->mul(h, f), g, k) ==
                  s3->mul(s3->iterated_commutator(h, g, k),
                          s3->iterated_commutator(f, g, k)));
  }
}

TEST_CASE("series restriction to normal subgroups") {
  for (const char* name : {"S4", "C2xS3", "D15", "remark72"}) {
    auto g = group_builtin(name);
    auto series = upper_fitting_series(*g);
    int d = series.fitting_length();
    for (const auto& h : all_normal_subgroups(*g)) {
      auto sub = subgroup_as_group(*g, h);
      auto hseries = upper_fitting_series(*sub.group);
      int dh = hseries.fitting_length();
      CHECK(dh == fitting_length_of_subgroup(series, h));
      for (int i = 0; i <= std::max(d, dh); ++i) {
        const ElemSet& hterm = hseries.terms[std::min(i, dh)];
        ElemSet mapped(g->order());
        for (int s = 0; s < sub.group->order(); ++s)
          if (hterm.test(s)) mapped.set(sub.to_parent[s]);
        CHECK(mapped == intersect(series.terms[std::min(i, d)], h));
      }
    }
  }
}

TEST_CASE("Fitting length of a principal normal closure locates its level") {
  for (const char* name : {"S4", "C2xS3", "remark72"}) {
    auto g = group_builtin(name);
    auto series = upper_fitting_series(*g);
    for (int x = 0; x < g->order(); ++x) {
      ElemSet ncl = normal_closure_of(*g, x);
      int level = fitting_length_of_subgroup(series, ncl);
      CHECK(series.terms[level].test(x));
      if (level > 0) CHECK(!series.terms[level - 1].test(x));
    }
  }
}

TEST_CASE("[M, k N] descends monotonically and is constant past omega") {
  auto g = group_builtin("S4");
  auto om = compute_omega(*g);
  auto lattice = all_normal_subgroups(*g);
  for (const auto& m : lattice)
    for (const auto& n : lattice) {
      ElemSet cur = m;
      for (int k = 1; k <= om.omega + 3; ++k) {
        ElemSet next = commutator_subgroup(*g, cur, n);
        CHECK(cur.contains(next));
        if (k > om.omega) CHECK(next == cur);
        cur = std::move(next);
      }
    }
}
