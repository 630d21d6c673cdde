#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fitgadget/poly.hpp"
#include "fitgadget/rng.hpp"
#include "fitgadget/structure.hpp"

namespace fitgadget {

struct RestrictResult {
  GroupPtr group;              // G0, as a group on its own indices
  std::vector<int> embedding;  // G0 index -> parent index
  int gamma_index = 0;         // G0 = gamma_m(parent)
};

/// G0 = gamma_m(G) for the maximal m whose term still sticks out of
/// U_{d-1}(G). Post-verifies that G0 keeps the Fitting length and has an
/// abelian top quotient. Throws FittingLengthTooSmall when d < 3.
RestrictResult restrict_to_g0(const GroupPtr& parent);

/// Polynomial whose image is gamma_j(G): a product of |G| commutator
/// factors of fresh copies of the previous witness.
GroupPolynomial inducibility_witness(GroupPtr group, int j);
/// Exact image of that witness, computed by set algebra over the
/// independent-factor structure.
ElemSet inducibility_witness_image(const FiniteGroup& g, int j);

/// Inclusion-minimal normal K with [K, G0] = K and FitL(K) = d - 1,
/// tie-broken by (order, mask). Post-verifies indecomposability.
ElemSet choose_k(const FiniteGroup& g0, const FittingSeries& series,
                 const std::vector<ElemSet>& lattice);

struct PhiReport {
  bool is_homomorphism = false;  // of the induced map on K/K0
  ElemSet kernel;                // {x in K : [x,g] in K0}
  bool is_bijective_on_quotient = false;
};

/// Tabulates phi_g : x -> [x,g] K0 on K.
PhiReport phi_analysis(const FiniteGroup& g, const ElemSet& k,
                       const ElemSet& k0, Elem conjugator);

struct LevelDiagnostic {
  int alpha = 0;
  int quotient_order = 0;
  int quotient_omega = 0;  // recomputed locally; never exceeds ambient
  int beta = 0;            // depth reached in the central series search
};

struct GadgetContext {
  GroupPtr parent;
  GroupPtr group;  // G0
  std::vector<int> embedding;
  int gamma_index = 0;
  FittingSeries series;  // of G0
  OmegaData omega;       // of G0
  ElemSet K, K0, H;
  Elem a = -1;             // first element of K \ K0
  Elem g = -1;             // first element of G0 \ H
  std::vector<Elem> h;     // h[alpha], alpha in 1..d (h[0] unused)
  int C = 0;               // |G0 / H|
  std::vector<LevelDiagnostic> level_diagnostics;

  int d() const { return series.fitting_length(); }
  bool prepared() const { return group != nullptr; }
  std::string fingerprint() const;
};

/// Runs the whole selection pipeline (restriction, K / K0 / H, the h
/// chain) and asserts every structural contract along the way.
GadgetContext prepare_context(const GroupPtr& parent);

struct GadgetFamily {
  enum class Kind { And, Sat };
  Kind kind = Kind::And;
  int level = 0;  // alpha
  int arity = 0;  // m: inputs for AND, clause triples for SAT
  GroupPolynomial polynomial;
  Elem true_target = -1;  // h_alpha
  ElemSet modulus;        // U_{alpha-1}
  BigInt declared_flat_length;
  std::string context_fingerprint;
};

GadgetFamily build_and_gadget(const GadgetContext& ctx, int level, int m);
GadgetFamily build_sat_gadget(const GadgetContext& ctx, int level, int m);

inline constexpr uint64_t kDefaultExhaustiveBudget = 1000000;

struct VerifyMode {
  bool exhaustive = true;
  uint64_t budget = kDefaultExhaustiveBudget;  // exhaustive evaluations
  uint64_t seed = kDefaultSeed;                // sampled mode
  int trials = 1000;                           // per membership pattern
  int jobs = 1;
};

struct GadgetCheckResult {
  bool pass = false;
  uint64_t assignments_tried = 0;
  std::optional<std::vector<Elem>> counterexample;
  std::string detail;
};

/// Checks the coset contract of a family against the H-membership
/// pattern of each assignment; exhaustive mode scans everything under
/// the budget, sampled mode stratifies patterns with a seeded generator.
GadgetCheckResult verify_gadget(const GadgetContext& ctx,
                                const GadgetFamily& family,
                                const VerifyMode& mode);

std::string gadget_header_json(const GadgetFamily& family);

}  // namespace fitgadget
