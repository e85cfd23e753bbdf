// Root systems of finite type, weights in the fundamental-weight basis,
// Weyl group walks and the Weyl dimension formula.
//
// Conventions (see docs/conventions.md):
//  * nodes are numbered from 1 following Bourbaki; for E6/E7 node 2 is the
//    branch node;
//  * a Weight stores the coefficients a_i = <lambda, alpha_i^vee>;
//  * cartan()[i][j] = <alpha_i, alpha_j^vee>, so row i is alpha_i written in
//    the fundamental-weight basis.
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bwb {

using BigInt = boost::multiprecision::cpp_int;

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', G = 'G' };

Series parse_series(char c);
inline char to_char(Series s) { return static_cast<char>(s); }

struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<int> c) : coords(c) {}

  int rank() const { return static_cast<int>(coords.size()); }
  int& operator[](int node) { return coords.at(node - 1); }
  int operator[](int node) const { return coords.at(node - 1); }

  bool is_dominant() const;
  bool has_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (int& c : a.coords) c *= k;
    return a;
  }
  Weight operator-() const { return -1 * *this; }
  auto operator<=>(const Weight&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);
std::string to_string(const Weight& w);

/// A reduced word [j1, ..., jl] stands for w = s_j1 s_j2 ... s_jl; it acts on
/// a weight by applying s_jl first.
using ReducedWord = std::vector<int>;

struct DominanceResult {
  Weight dominant;
  int length = 0;
  bool singular = false;
};

struct WalkStep {
  int node;      // reflection applied to reach `weight`
  Weight weight;
};

/// Picks the node to reflect at among the nodes with negative coordinate
/// (given in increasing order). Must return one of them.
using PivotChooser = std::function<int(const Weight&, std::span<const int>)>;

class RootSystem {
public:
  RootSystem(Series series, int rank);

  /// Shared, immutable instance; construction is cached.
  static std::shared_ptr<const RootSystem> get(Series series, int rank);

  Series series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const;

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Squared length of the simple roots, scaled so that all values are
  /// integers and the shortest root type has the smallest value.
  const std::vector<int>& simple_root_norms() const { return norms_; }
  /// Positive roots as coefficient vectors over the simple roots, sorted by
  /// height and then lexicographically.
  const std::vector<std::vector<int>>& positive_roots() const { return positive_; }
  const std::vector<int>& highest_root() const { return positive_.back(); }

  /// dim of the simple Lie algebra.
  int group_dimension() const { return rank_ + 2 * static_cast<int>(positive_.size()); }

  int root_norm(std::span<const int> root) const;
  /// <lambda, beta^vee> for beta given by simple-root coefficients.
  int pairing(const Weight& lambda, std::span<const int> root) const;
  /// The root beta expressed in the fundamental-weight basis.
  Weight root_weight(std::span<const int> root) const;

  Weight zero() const { return Weight(std::vector<int>(rank_, 0)); }
  Weight rho() const { return Weight(std::vector<int>(rank_, 1)); }
  Weight fundamental(int node) const;

  Weight simple_reflection(int node, const Weight& w) const;
  Weight apply(const ReducedWord& word, const Weight& w) const;

  /// Reflects at negative coordinates until the weight is dominant. The walk
  /// is always completed, so the result does not depend on the pivot order.
  DominanceResult to_dominant(const Weight& w) const;
  DominanceResult to_dominant(const Weight& w, const PivotChooser& choose) const;
  std::vector<WalkStep> dominance_walk(const Weight& w, const PivotChooser& choose = {}) const;

  /// Same walk with early exit: returns false as soon as a zero coordinate
  /// shows up (the weight lies on a wall).
  bool regular_dominant(Weight w, Weight& dominant, int& length) const;

  /// Weyl dimension formula; rejects non-dominant weights.
  BigInt weyl_dim(const Weight& lambda) const;
  /// Dimension of the irreducible module of the Levi subalgebra obtained by
  /// removing the marked nodes; lambda must be dominant on unmarked nodes.
  BigInt levi_dim(const Weight& lambda, std::span<const int> marked) const;

  /// Minimal-length representatives w of W_P \ W, grouped by length,
  /// P the parabolic of the marked nodes. Entry p lists the words of length p.
  std::vector<std::vector<ReducedWord>> minimal_coset_reps(std::span<const int> marked) const;
  std::vector<ReducedWord> minimal_coset_reps(std::span<const int> marked, int length) const;

  /// Number of positive roots with nonzero coefficient on some marked node.
  int nilradical_size(std::span<const int> marked) const;
  /// True iff the node has coefficient 1 in the highest root.
  bool is_cominuscule(int node) const;

private:
  void check_node(int node) const;

  Series series_;
  int rank_;
  std::vector<std::vector<int>> inner_;   // scaled (alpha_i, alpha_j)
  std::vector<std::vector<int>> cartan_;
  std::vector<int> norms_;
  std::vector<std::vector<int>> positive_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace bwb
