// Jacobian rings of generic weighted hypersurfaces: Hilbert function and the
// primitive middle Hodge numbers it computes.
#pragma once

#include <string>
#include <vector>

#include "bwb/rootsys.hpp"

namespace bwb {

struct WeightedHypersurface {
  std::vector<int> weights;  // w_0..w_n
  int degree = 0;

  /// Throws std::invalid_argument unless d > w_i > 0 for all i.
  void validate() const;
  int ambient_dim() const { return static_cast<int>(weights.size()) - 1; }  // n
  int weight_sum() const;
  /// Socle degree sum(d - 2 w_i) of the Jacobian ring.
  int socle_degree() const;
  std::string weights_text() const;  // "1^6,2"
};

/// Coefficient of t^k in prod (1 - t^{d-w_i}) / (1 - t^{w_i}).
BigInt jacobian_hilbert(const WeightedHypersurface& X, int k);

/// entries[p] = h^{n-1-p,p}_0 = R_{(p+1)d - |w|}, p = 0..n-1.
struct PrimitiveRow {
  int dim = 0;  // n - 1
  std::vector<BigInt> entries;
};

PrimitiveRow steenbrink_hodge(const WeightedHypersurface& X);

/// "cubic", "quintic", ...; "degree-12" past ten.
std::string degree_word(int degree);
/// "fivefold", ...; "12-fold" past nine.
std::string dim_word(int dim);
/// "cubic sevenfold" for 1^{n+1}, "double quartic fivefold" for (1^{n+1}, d/2);
/// otherwise "X_d in P(w)".
std::string describe(const WeightedHypersurface& X);

struct WeightedScanRow {
  int dim = 0;
  WeightedHypersurface X;
  BigInt moduli;  // R_d
  bool vetted = false;  // one of the three listed examples
};

/// Hypersurfaces with n = 2m, |w| = (m-1)d, odd dimension in [5, max_dim],
/// weights nondecreasing and <= max_weight, degree <= max_degree.
std::vector<WeightedScanRow> weighted_cy_scan(int max_dim, int max_weight, int max_degree);

}  // namespace bwb
