#pragma once

#include <vector>

#include "fitgadget/group.hpp"

namespace fitgadget {

inline constexpr int kDefaultLatticeCap = 10000;

/// Smallest subgroup containing the nonempty subset.
ElemSet subgroup_closure(const FiniteGroup& g, const ElemSet& seed);

/// Smallest normal subgroup containing the nonempty subset.
ElemSet normal_closure(const FiniteGroup& g, const ElemSet& seed);
ElemSet normal_closure_of(const FiniteGroup& g, Elem x);

/// [A, B, ..., B] with k copies of B; A and B must be normal. The result
/// is the subgroup generated by the element commutators, and is normal.
ElemSet commutator_subgroup(const FiniteGroup& g, const ElemSet& a,
                            const ElemSet& b, int k = 1);

struct LowerCentralSeries {
  std::vector<ElemSet> terms;  // gamma_0 = G down to the stable term
  int residual_index = 0;      // first i with gamma_i = gamma_{i+1}

  const ElemSet& residual() const { return terms[residual_index]; }
};

LowerCentralSeries lower_central_series(const FiniteGroup& g);
ElemSet nilpotent_residual(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);
/// Nilpotency of a subgroup, via its central series inside g.
bool is_nilpotent_subgroup(const FiniteGroup& g, const ElemSet& h);

struct PairOrbit {
  int preperiod = 0;  // index where the cycle of i -> [x, i y] starts
  int period = 1;     // cycle length
};

struct OmegaData {
  int omega = 1;
  int k0 = 0;              // stabilization bound over normal-subgroup chains
  int max_preperiod = 0;
  long long period_lcm = 1;
  std::vector<PairOrbit> pairs;  // diagnostic, indexed by x * order + y
};

/// Least positive omega that bounds every pair preperiod, is a common
/// multiple of every pair period, and bounds the subgroup-chain
/// stabilization index k0. Both defining properties are re-verified.
OmegaData compute_omega(const FiniteGroup& g);

/// Baer's set {g : [h, omega g] = 1 for all h}; verified to be a
/// nilpotent normal subgroup before returning.
ElemSet fitting_subgroup(const FiniteGroup& g);
ElemSet fitting_subgroup(const FiniteGroup& g, const OmegaData& omega);

struct FittingSeries {
  std::vector<ElemSet> terms;  // U_0 = 1 up to U_d = G
  int fitting_length() const { return static_cast<int>(terms.size()) - 1; }
};

/// Upper Fitting series; each step recomputes omega in the explicit
/// quotient before applying Baer there. Throws NotSolvable if the series
/// stalls below G.
FittingSeries upper_fitting_series(const FiniteGroup& g);

/// Least i with H contained in U_i.
int fitting_length_of_subgroup(const FittingSeries& series, const ElemSet& h);

/// Complete normal-subgroup lattice: join-closure of the cyclic normal
/// closures plus the trivial subgroup, sorted by (order, mask).
std::vector<ElemSet> all_normal_subgroups(const FiniteGroup& g,
                                          int cap = kDefaultLatticeCap);

/// H = {g : [x, g] in K0 for all x in K}, the centralizer of K modulo K0.
ElemSet centralizer_mod(const FiniteGroup& g, const ElemSet& k,
                        const ElemSet& k0);

ElemSet trivial_subgroup(const FiniteGroup& g);
/// Product set AB (a subgroup when A, B are normal).
ElemSet subgroup_product(const FiniteGroup& g, const ElemSet& a,
                         const ElemSet& b);

}  // namespace fitgadget
