// Cohomology of irreducible homogeneous bundles on G/P (Borel-Weil-Bott),
// Kostant's decomposition of the bundles of p-forms on cominuscule spaces,
// and the type A / type D fast paths working in epsilon coordinates.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bwb/catalog.hpp"
#include "bwb/rootsys.hpp"

namespace bwb {

/// E_lambda on a (product) homogeneous space, with the twist already folded
/// into the marked coordinate of each factor. Construct with make_bundle.
struct IrreducibleBundle {
  const HomogSpace* space = nullptr;
  std::vector<Weight> hw;  // per factor, Levi-dominant

  bool operator==(const IrreducibleBundle& o) const { return space == o.space && hw == o.hw; }
};

/// hw + twist_i * omega_{marked_i} per factor; throws std::invalid_argument
/// when an unmarked coordinate is negative.
IrreducibleBundle make_bundle(const HomogSpace& space, std::vector<Weight> hw, const Twist& twist = {});

/// E_lambda tensored by O(twist).
IrreducibleBundle twisted(const IrreducibleBundle& b, const Twist& twist);

struct CohomologyGroup {
  std::vector<Weight> highest;  // per factor dominant weight mu
  BigInt dim;
};

/// Cohomology of an irreducible bundle: at most one entry; empty = acyclic.
struct CohomologyTable {
  std::map<int, CohomologyGroup> entries;
  bool acyclic() const { return entries.empty(); }
  bool operator==(const CohomologyTable& o) const;
};

/// Degree -> total dimension, for direct sums of irreducible bundles.
using CohomologyDims = std::map<int, BigInt>;

CohomologyTable bwb(const IrreducibleBundle& bundle);

/// Dual bundle tensored by the canonical bundle.
IrreducibleBundle serre_dual(const IrreducibleBundle& bundle);

/// Summands E_{w(rho)-rho} of Omega^p, w minimal of length p (per factor,
/// convolved over products). Throws for non-cominuscule factors.
std::vector<IrreducibleBundle> kostant_forms(const HomogSpace& space, int p);

/// H^*(Omega^p(twist)) summed over the Kostant summands.
CohomologyDims forms_cohomology(const HomogSpace& space, int p, const Twist& twist);
CohomologyDims forms_cohomology(const HomogSpace& space, int p, int twist_multiple_of_L);

/// chi(Omega^p(twist)) through the torus character of the cotangent fibre;
/// works on every space, cominuscule or not.
BigInt euler_char(const HomogSpace& space, int p, const Twist& twist);
BigInt euler_char(const HomogSpace& space, int p, int twist_multiple_of_L);

/// Signed sum over a CohomologyDims.
BigInt alternating_sum(const CohomologyDims& dims);

// ---------------------------------------------------------------------------
// Fast paths. Epsilon sequences are stored doubled so spinor twists by the
// half-spin class stay integral.

struct GrassmannLabel {
  std::vector<int> qdual;  // partition for S_alpha Q^*, at most n-k parts
  std::vector<int> e;      // partition for S_beta E, at most k parts
};

/// Parses "Q*:1111;E:4" (digits are parts; commas allowed for parts >= 10).
GrassmannLabel parse_grassmann_label(const std::string& text);

/// G(k,n): (Q-part, E-part) epsilon sequence of S_alpha Q^* (x) S_beta E (x) O(twist),
/// not yet shifted by rho. Plain integers.
std::vector<int> grassmann_epsilon(const HomogSpace& space, const GrassmannLabel& label, int twist);
IrreducibleBundle grassmann_bundle(const HomogSpace& space, const GrassmannLabel& label, int twist);
CohomologyTable fastpath_grassmann(const HomogSpace& space, const GrassmannLabel& label, int twist);

/// S_2n: doubled epsilon sequence of S_lambda E (x) O(twist) (E of rank n with
/// weights -eps_i; O(1) the half-spin class).
std::vector<int> spinor_epsilon2(const HomogSpace& space, const std::vector<int>& schur, int twist);
IrreducibleBundle spinor_bundle(const HomogSpace& space, const std::vector<int>& schur, int twist);
/// Bundle whose rho-shifted (undoubled) epsilon sequence is `shifted`.
IrreducibleBundle spinor_bundle_from_shifted(const HomogSpace& space, const std::vector<int>& shifted);
CohomologyTable fastpath_spinor(const HomogSpace& space, const std::vector<int>& schur, int twist);
/// Works directly on a doubled rho-shifted epsilon sequence.
CohomologyTable fastpath_spinor_shifted2(const HomogSpace& space, const std::vector<int>& shifted2);

/// Fast path for any bundle on a single Grassmannian or spinor variety.
CohomologyTable fastpath(const IrreducibleBundle& bundle);

/// Doubled epsilon coordinates of a D_n weight, and back.
std::vector<int> d_epsilon2_from_weight(const Weight& w);
Weight d_weight_from_epsilon2(const std::vector<int>& eps2);

bool is_grassmannian(const HomogSpace& space);
bool is_spinor(const HomogSpace& space);

}  // namespace bwb
