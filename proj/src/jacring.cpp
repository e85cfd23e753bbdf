#include "bwb/jacring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bwb {

void WeightedHypersurface::validate() const {
  if (weights.empty()) throw std::invalid_argument("weighted hypersurface needs at least one weight");
  if (degree <= 0) throw std::invalid_argument("hypersurface degree must be positive");
  for (int w : weights) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
    if (degree - w < 1)
      throw std::invalid_argument("degree " + std::to_string(degree) + " must exceed every weight");
  }
}

int WeightedHypersurface::weight_sum() const { return std::accumulate(weights.begin(), weights.end(), 0); }

int WeightedHypersurface::socle_degree() const {
  int s = 0;
  for (int w : weights) s += degree - 2 * w;
  return s;
}

std::string WeightedHypersurface::weights_text() const {
  std::vector<int> w = weights;
  std::sort(w.begin(), w.end());
  std::ostringstream os;
  for (size_t i = 0; i < w.size();) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    os << (i ? "," : "") << w[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

BigInt jacobian_hilbert(const WeightedHypersurface& X, int k) {
  X.validate();
  if (k < 0) return 0;
  // Multiply the truncated series factor by factor.
  std::vector<BigInt> c(k + 1, 0);
  c[0] = 1;
  for (int w : X.weights) {
    // 1 / (1 - t^w)
    for (int i = w; i <= k; ++i) c[i] += c[i - w];
    // (1 - t^{d-w})
    const int e = X.degree - w;
    for (int i = k; i >= e; --i) c[i] -= c[i - e];
  }
  return c[k];
}

PrimitiveRow steenbrink_hodge(const WeightedHypersurface& X) {
  X.validate();
  PrimitiveRow row;
  const int n = X.ambient_dim();
  row.dim = n - 1;
  for (int p = 0; p < n; ++p) row.entries.push_back(jacobian_hilbert(X, (p + 1) * X.degree - X.weight_sum()));
  return row;
}

namespace {

const std::vector<std::string> kDegreeWords = {"", "linear", "quadric", "cubic", "quartic", "quintic",
                                               "sextic", "septic", "octic", "nonic", "decic"};
const std::vector<std::string> kDimWords = {"", "", "", "three", "four", "five",
                                            "six", "seven", "eight", "nine"};

}  // namespace

std::string degree_word(int degree) {
  return degree > 0 && degree < static_cast<int>(kDegreeWords.size()) ? kDegreeWords[degree]
                                                                       : "degree-" + std::to_string(degree);
}

std::string dim_word(int dim) {
  return dim > 0 && dim < static_cast<int>(kDimWords.size()) && !kDimWords[dim].empty()
             ? kDimWords[dim] + "fold"
             : std::to_string(dim) + "-fold";
}

std::string describe(const WeightedHypersurface& X) {
  std::vector<int> w = X.weights;
  std::sort(w.begin(), w.end());
  const int ones = static_cast<int>(std::count(w.begin(), w.end(), 1));
  const int n = X.ambient_dim();
  if (ones == n + 1) return degree_word(X.degree) + " " + dim_word(n - 1);
  if (ones == n && 2 * w.back() == X.degree) return "double " + degree_word(X.degree) + " " + dim_word(n - 1);
  return "X_" + std::to_string(X.degree) + " in P(" + X.weights_text() + ")";
}

namespace {

bool is_listed(const WeightedHypersurface& X) {
  std::vector<int> w = X.weights;
  std::sort(w.begin(), w.end());
  if (X.degree == 3 && w == std::vector<int>(9, 1)) return true;
  if (X.degree == 4 && w == std::vector<int>{1, 1, 1, 1, 1, 1, 2}) return true;
  return false;
}

void nondecreasing(int len, int max_w, std::vector<int>& cur, const auto& visit) {
  if (static_cast<int>(cur.size()) == len) {
    visit(cur);
    return;
  }
  for (int w = cur.empty() ? 1 : cur.back(); w <= max_w; ++w) {
    cur.push_back(w);
    nondecreasing(len, max_w, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<WeightedScanRow> weighted_cy_scan(int max_dim, int max_weight, int max_degree) {
  std::vector<WeightedScanRow> rows;
  for (int dim = 5; dim <= max_dim; dim += 2) {
    const int n = dim + 1, m = n / 2;
    std::vector<int> cur;
    nondecreasing(n + 1, max_weight, cur, [&](const std::vector<int>& w) {
      const int sum = std::accumulate(w.begin(), w.end(), 0);
      if (sum % (m - 1) != 0) return;
      const int d = sum / (m - 1);
      if (d > max_degree || d <= w.back()) return;
      WeightedHypersurface X{w, d};
      rows.push_back({dim, X, jacobian_hilbert(X, d), is_listed(X)});
    });
  }
  return rows;
}

}  // namespace bwb
