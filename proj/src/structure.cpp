#include "fitgadget/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fitgadget/errors.hpp"

namespace fitgadget {

ElemSet trivial_subgroup(const FiniteGroup& g) {
  return ElemSet::singleton(g.order(), g.identity());
}

ElemSet subgroup_closure(const FiniteGroup& g, const ElemSet& seed) {
  require(seed.count() >= 1, ErrorKind::InvalidInput, "empty generating set");
  ElemSet out(g.order());
  out.set(g.identity());
  std::vector<int> queue{g.identity()};
  std::vector<int> gens = seed.members();
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int x : gens) {
      int next = g.mul(queue[head], x);
      if (!out.test(next)) {
        out.set(next);
        queue.push_back(next);
      }
    }
  }
  return out;
}

ElemSet normal_closure(const FiniteGroup& g, const ElemSet& seed) {
  ElemSet conj_closed(g.order());
  for (int x : seed.members())
    for (int y = 0; y < g.order(); ++y) conj_closed.set(g.conj(x, y));
  ElemSet out = subgroup_closure(g, conj_closed);
  // closure of a conjugation-closed set is conjugation-closed
  return out;
}

ElemSet normal_closure_of(const FiniteGroup& g, Elem x) {
  return normal_closure(g, ElemSet::singleton(g.order(), x));
}

ElemSet subgroup_product(const FiniteGroup& g, const ElemSet& a,
                         const ElemSet& b) {
  ElemSet out(g.order());
  for (int x : a.members())
    for (int y : b.members()) out.set(g.mul(x, y));
  return out;
}

namespace {

ElemSet commutator_once(const FiniteGroup& g, const ElemSet& a,
                        const ElemSet& b) {
  ElemSet gens(g.order());
  gens.set(g.identity());
  for (int x : a.members())
    for (int y : b.members()) gens.set(g.commutator(x, y));
  return subgroup_closure(g, gens);
}

}  // namespace

ElemSet commutator_subgroup(const FiniteGroup& g, const ElemSet& a,
                            const ElemSet& b, int k) {
  require(k >= 1, ErrorKind::InvalidInput, "k must be positive");
  require(is_normal(g, a) && is_normal(g, b), ErrorKind::NotNormal,
          "commutator subgroup arguments must be normal");
  ElemSet cur = a;
  for (int i = 0; i < k; ++i) cur = commutator_once(g, cur, b);
  require(is_normal(g, cur), ErrorKind::NotNormal,
          "commutator subgroup came out non-normal");
  return cur;
}

LowerCentralSeries lower_central_series(const FiniteGroup& g) {
  LowerCentralSeries out;
  out.terms.push_back(ElemSet::full(g.order()));
  for (;;) {
    ElemSet next = commutator_once(g, out.terms.back(), out.terms.front());
    if (next == out.terms.back()) {
      out.residual_index = static_cast<int>(out.terms.size()) - 1;
      return out;
    }
    out.terms.push_back(std::move(next));
  }
}

ElemSet nilpotent_residual(const FiniteGroup& g) {
  return lower_central_series(g).residual();
}

bool is_nilpotent(const FiniteGroup& g) {
  return nilpotent_residual(g).count() == 1;
}

bool is_nilpotent_subgroup(const FiniteGroup& g, const ElemSet& h) {
  ElemSet cur = h;
  for (;;) {
    ElemSet next = commutator_once(g, cur, h);
    if (next.count() == 1) return true;
    if (next == cur) return false;
    cur = std::move(next);
  }
}

namespace {

PairOrbit pair_orbit(const FiniteGroup& g, Elem x, Elem y) {
  std::vector<int> first_seen(g.order(), -1);
  int cur = x, step = 0;
  while (first_seen[cur] < 0) {
    first_seen[cur] = step;
    cur = g.commutator(cur, y);
    ++step;
  }
  PairOrbit orbit;
  orbit.preperiod = first_seen[cur];
  orbit.period = step - first_seen[cur];
  return orbit;
}

}  // namespace

OmegaData compute_omega(const FiniteGroup& g) {
  OmegaData data;
  int n = g.order();
  data.pairs.resize(static_cast<size_t>(n) * n);
  long long lcm = 1;
  int max_pre = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      PairOrbit orbit = pair_orbit(g, x, y);
      data.pairs[static_cast<size_t>(x) * n + y] = orbit;
      max_pre = std::max(max_pre, orbit.preperiod);
      lcm = std::lcm(lcm, static_cast<long long>(orbit.period));
    }
  data.max_preperiod = max_pre;
  data.period_lcm = lcm;

  // stabilization index of [M, k N] over all normal pairs
  auto lattice = all_normal_subgroups(g);
  int k0 = 0;
  for (const auto& m : lattice)
    for (const auto& nn : lattice) {
      ElemSet cur = m;
      int k = 0;
      for (;;) {
        ElemSet next = commutator_once(g, cur, nn);
        if (next == cur) break;
        require(cur.contains(next), ErrorKind::NotNormal,
                "[M, k N] chain failed to descend");
        cur = std::move(next);
        ++k;
      }
      k0 = std::max(k0, k);
    }
  data.k0 = k0;

  long long need = std::max({static_cast<long long>(max_pre),
                             static_cast<long long>(k0), 1ll});
  long long omega = lcm * ((need + lcm - 1) / lcm);
  data.omega = static_cast<int>(omega);

  // re-verify the defining properties over a full period window:
  // [x, omega+i y] = [x, 2*omega+i y] for all i < omega
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int u = g.iterated_commutator(x, y, data.omega);
      int v = g.iterated_commutator(u, y, data.omega);
      for (int i = 0; i < data.omega; ++i) {
        require(u == v, ErrorKind::BaerSetNotSubgroup,
                "omega does not stabilize an element pair");
        u = g.commutator(u, y);
        v = g.commutator(v, y);
      }
    }
  for (const auto& m : lattice)
    for (const auto& nn : lattice) {
      ElemSet a = m;
      for (int i = 0; i < data.omega; ++i) a = commutator_once(g, a, nn);
      ElemSet b = commutator_once(g, a, nn);
      require(a == b, ErrorKind::BaerSetNotSubgroup,
              "omega below subgroup-chain stabilization");
    }
  return data;
}

ElemSet fitting_subgroup(const FiniteGroup& g, const OmegaData& omega) {
  ElemSet fit(g.order());
  for (int x = 0; x < g.order(); ++x) {
    bool in = true;
    for (int h = 0; h < g.order() && in; ++h) {
      int cur = h;
      for (int i = 0; i < omega.omega && cur != g.identity(); ++i)
        cur = g.commutator(cur, x);
      in = cur == g.identity();
    }
    if (in) fit.set(x);
  }
  require(is_subgroup(g, fit), ErrorKind::BaerSetNotSubgroup,
          "Baer set is not a subgroup");
  require(is_normal(g, fit), ErrorKind::BaerSetNotSubgroup,
          "Baer set is not normal");
  require(is_nilpotent_subgroup(g, fit), ErrorKind::BaerSetNotSubgroup,
          "Baer set is not nilpotent");
  return fit;
}

ElemSet fitting_subgroup(const FiniteGroup& g) {
  return fitting_subgroup(g, compute_omega(g));
}

FittingSeries upper_fitting_series(const FiniteGroup& g) {
  FittingSeries series;
  series.terms.push_back(trivial_subgroup(g));
  while (series.terms.back().count() < g.order()) {
    const ElemSet& u = series.terms.back();
    auto [qg, proj] = quotient_group(g, u);
    ElemSet qfit = fitting_subgroup(*qg);  // quotient-local omega
    ElemSet next(g.order());
    for (int x = 0; x < g.order(); ++x)
      if (qfit.test(proj[x])) next.set(x);
    require(next != u, ErrorKind::NotSolvable,
            "upper Fitting series stalls below the whole group");
    series.terms.push_back(std::move(next));
  }
  return series;
}

int fitting_length_of_subgroup(const FittingSeries& series, const ElemSet& h) {
  for (size_t i = 0; i < series.terms.size(); ++i)
    if (series.terms[i].contains(h)) return static_cast<int>(i);
  fail(ErrorKind::InvalidInput, "subgroup not contained in the series top");
}

std::vector<ElemSet> all_normal_subgroups(const FiniteGroup& g, int cap) {
  std::set<ElemSet> found;
  found.insert(trivial_subgroup(g));
  for (int x = 0; x < g.order(); ++x) found.insert(normal_closure_of(g, x));

  // join-closure under subgroup product
  std::vector<ElemSet> work(found.begin(), found.end());
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      ElemSet join = subgroup_product(g, work[i], work[j]);
      if (found.insert(join).second) {
        require(static_cast<int>(found.size()) <= cap,
                ErrorKind::LatticeCapExceeded,
                "normal lattice exceeds cap " + std::to_string(cap));
        work.push_back(std::move(join));
      }
    }
  }
  std::vector<ElemSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), lattice_less);
  return out;
}

ElemSet centralizer_mod(const FiniteGroup& g, const ElemSet& k,
                        const ElemSet& k0) {
  require(k.contains(k0), ErrorKind::NotNested, "K0 must be contained in K");
  ElemSet out(g.order());
  auto km = k.members();
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int a : km)
      if (!k0.test(g.commutator(a, x))) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  require(is_normal(g, out), ErrorKind::NotNormal,
          "centralizer mod K0 came out non-normal");
  return out;
}

}  // namespace fitgadget
