// Hodge numbers of complete intersections in homogeneous spaces and of
// double covers, moduli counts, and the checks built on them.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bwb/bott.hpp"
#include "bwb/catalog.hpp"
#include "json.hpp"

namespace bwb {

/// Closed range of nonnegative integers; exact when lo == hi.
struct Interval {
  BigInt lo = 0;
  BigInt hi = 0;

  static Interval exact(BigInt v) { return {v, v}; }
  bool is_exact() const { return lo == hi; }
  bool contains(const BigInt& v) const { return lo <= v && v <= hi; }
  Interval& operator+=(const Interval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
  bool operator==(const Interval&) const = default;
  std::string to_string() const;  // "80" or "[3,7]"
};

/// Zero locus X of a general section of a sum of line bundles on the ambient
/// space, optionally replaced by the double cover of X branched along a
/// general member of |branch_degree * L|.
struct SectionSpec {
  const HomogSpace* ambient = nullptr;
  std::vector<Twist> cuts;            // one degree vector per hypersurface
  std::optional<int> branch_degree;   // 2d

  /// Throws std::invalid_argument on malformed degree vectors.
  void validate() const;
  int dimension() const;
  /// -K_X per factor: index vector minus the sum of the cuts.
  Twist anticanonical() const;
  bool is_fano() const;
  bool is_calabi_yau() const;
  std::string describe() const;
};

SectionSpec linear_section(const HomogSpace& space, int s);
/// One cut of degree d * L per entry.
SectionSpec degree_section(const HomogSpace& space, const std::vector<int>& degrees);
SectionSpec double_cover(const HomogSpace& space, int branch_degree, const std::vector<int>& base_degrees = {});

/// Chase rules on top of the spectral-sequence bounds (degree reasons are
/// always applied).
struct ChaseRules {
  bool serre = true;           // h^{p,q} = h^{n-p,n-q}
  bool hodge_symmetry = true;  // h^{p,q} = h^{q,p}
  bool lefschetz = true;       // off-middle entries come from the ambient space
  bool euler = true;           // sum_q (-1)^q h^{p,q} = chi(Omega^p_X)

  static ChaseRules none() { return {false, false, false, false}; }
  static ChaseRules symmetries_only() { return {true, true, false, false}; }
};

struct HodgeRow {
  int n = 0;
  std::vector<Interval> entries;  // entries[p] = h^{p,n-p}
  std::vector<std::string> provenance;
  bool euler_only = false;

  bool is_exact() const;
  /// h^{p,n-p} as an exact value; throws std::logic_error on a range.
  BigInt at(int p) const;
};

struct HodgeDiamond {
  int n = 0;
  std::vector<std::vector<Interval>> h;  // h[p][q]
  std::vector<std::string> provenance;
  std::vector<std::string> rules_fired;
  bool euler_only = false;

  const Interval& at(int p, int q) const { return h.at(p).at(q); }
  bool is_exact() const;
  HodgeRow middle_row() const;
};

/// h^{p,p} of the ambient space: Schubert cell counts, convolved over factors.
std::vector<BigInt> ambient_hodge(const HomogSpace& space);

HodgeDiamond section_diamond(const SectionSpec& spec, const ChaseRules& rules = {});
HodgeRow section_hodge(const SectionSpec& spec, const ChaseRules& rules = {});

/// h^q(X, O_X(twist)) through the Koszul complex.
std::vector<Interval> restricted_line_cohomology(const SectionSpec& spec, const Twist& twist);

/// chi(X, Omega^j_X(twist)) for X = ambient cut by `cuts`; any catalog ambient.
BigInt section_euler_char(const HomogSpace& ambient, const std::vector<Twist>& cuts, int j, const Twist& twist);

/// h^q(Sigma, T Sigma(twist)) for q in [0, dim]; bounds from the graded
/// pieces of the tangent bundle, exact when they do not interfere.
std::vector<Interval> tangent_cohomology(const HomogSpace& space, const Twist& twist);

HodgeDiamond double_cover_diamond(const SectionSpec& spec);
HodgeRow double_cover_hodge(const SectionSpec& spec);

// ---------------------------------------------------------------------------
// Moduli

enum class Route {
  grassmannian,          // s(N+1-s) - delta for linear sections
  cohomological,         // sum h^0(O_X(D_j)) - delta
  hypersurface_count,
  cayley_ci,
  double_cover_count,    // h^0(O(2d)) - 1 - delta: branch divisors modulo Aut
  double_cover_tangent,  // the count plus the anti-invariant part h^1(T Sigma(-d))
};
std::string route_name(Route r);

struct ModuliReport {
  BigInt value;
  Route route = Route::cohomological;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::vector<std::string> assumptions;
};

std::vector<Route> applicable_routes(const SectionSpec& spec);
ModuliReport deformation_moduli(const SectionSpec& spec, Route route);

/// sum C(N+d_i, d_i) - sum_{i,j} C(N+d_i-d_j, N) - ((N+1)^2 - 1).
ModuliReport ci_moduli(int N, const std::vector<int>& degrees);
/// Double cover of P^n branched in degree 2d: C(n+2d, 2d) - 1 - ((n+1)^2 - 1).
ModuliReport double_cover_moduli(int n, int d);

// ---------------------------------------------------------------------------
// The series of spaces whose dual variety has degree coindex - 1.

struct SeriesFacts {
  int r = 0;  // index
  int c = 0;  // coindex
  int s = 0;  // codimension of the linear section, r - c + 1
  int n = 0;  // dimension of the section, 2c - 1
};

bool in_series(const HomogSpace& space);
SeriesFacts series_facts(const HomogSpace& space);

/// C(s+c-2, c-1) - s^2.
BigInt closed_form_hcc1(int s, int c);
BigInt closed_form_hcc1(const HomogSpace& space);

struct CohomologyCell {
  int degree = 0;
  BigInt dim;
};

/// Unique nonzero H^q(Omega^{c-2}(c-r-1)); throws std::logic_error if the
/// cohomology is not concentrated in one degree.
CohomologyCell lemma_nonvan_check(const HomogSpace& space);

struct VanCell {
  int p, k, q;
  BigInt dim;
  bool operator==(const VanCell&) const = default;
};

struct VanScan {
  std::vector<VanCell> nonzero;
  int cells = 0;        // (p,k) pairs scanned
  int bott_calls = 0;   // irreducible summands evaluated
};

/// H^q(Omega^p(-k)) for p <= c-1, 1 <= k <= r-p.
VanScan lemma_van_scan(const HomogSpace& space);

struct CyVerdict {
  std::string clause1;  // pass / fail / inconclusive
  std::string clause2;  // dimension level: h^{n+1,n} against the moduli count
  std::string clause2_map = "not checked (out of scope)";
  std::string clause3;
  std::string overall;
  std::vector<std::string> notes;
};

CyVerdict cy_type_verdict(const HodgeDiamond& diamond, const ModuliReport& h1tx);

struct DualReport {
  std::string x;              // "OP2 cap P17"
  std::string x_star;         // "cubic sevenfold"
  bool x_star_double_cover = false;
  int projective_dim = 0;     // M, X* lives over P^M
  int degree = 0;             // c - 1
  ModuliReport x_moduli;
  ModuliReport x_star_moduli;
  bool agree = false;
  BigInt jacobian_dim_x;      // h^{n+1,n}(X) + 1
  BigInt jacobian_dim_x_star;
};

DualReport dual_correspondence(const HomogSpace& space);

}  // namespace bwb
