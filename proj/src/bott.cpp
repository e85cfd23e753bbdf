#include "bwb/bott.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace bwb {

namespace {

using FactorKey = std::tuple<char, int, int>;

FactorKey key_of(const Factor& f) { return {to_char(f.series), f.rank, f.node}; }

void check_space(const HomogSpace& space, const std::vector<Weight>& hw) {
  if (hw.size() != space.factors.size())
    throw std::invalid_argument("bundle on " + space.name + " needs one weight per factor");
  for (size_t i = 0; i < hw.size(); ++i)
    if (hw[i].rank() != space.factors[i].rank)
      throw std::invalid_argument("weight " + to_string(hw[i]) + " has the wrong rank for " + space.name);
}

void check_levi_dominant(const HomogSpace& space, const std::vector<Weight>& hw) {
  for (size_t i = 0; i < hw.size(); ++i)
    for (int j = 1; j <= hw[i].rank(); ++j)
      if (j != space.factors[i].node && hw[i][j] < 0)
        throw std::invalid_argument("weight " + to_string(hw[i]) +
                                    " is not Levi-dominant (negative unmarked coordinate)");
}

struct FactorResult {
  bool regular = false;
  int degree = 0;
  Weight mu;
};

FactorResult factor_bwb(const RootSystem& rs, const Weight& lambda) {
  FactorResult r;
  Weight dom;
  int len = 0;
  if (!rs.regular_dominant(lambda + rs.rho(), dom, len)) return r;
  r.regular = true;
  r.degree = len;
  r.mu = dom - rs.rho();
  return r;
}

// Memo tables shared by concurrent callers. Values are deterministic, so a
// lost race only costs a recomputation.
template <class K, class V>
class Memo {
public:
  template <class F>
  V get(const K& key, F&& compute) {
    {
      std::shared_lock lock(mu_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    V value = compute();
    std::unique_lock lock(mu_);
    return table_.emplace(key, std::move(value)).first->second;
  }

private:
  std::shared_mutex mu_;
  std::map<K, V> table_;
};

// Kostant weights w(rho) - rho of one factor, indexed by length.
const std::vector<std::vector<Weight>>& factor_kostant(const Factor& f) {
  static Memo<FactorKey, std::shared_ptr<const std::vector<std::vector<Weight>>>> memo;
  auto ptr = memo.get(key_of(f), [&] {
    if (!f.is_cominuscule())
      throw std::invalid_argument("Omega^p does not split on the non-cominuscule factor " +
                                  f.root_system()->name() + "/" + std::to_string(f.node) +
                                  "; use euler_char");
    auto rs = f.root_system();
    const int marked[] = {f.node};
    auto out = std::make_shared<std::vector<std::vector<Weight>>>();
    for (const auto& words : rs->minimal_coset_reps(marked)) {
      std::vector<Weight> level;
      for (const auto& w : words) level.push_back(rs->apply(w, rs->rho()) - rs->rho());
      out->push_back(std::move(level));
    }
    return std::shared_ptr<const std::vector<std::vector<Weight>>>(std::move(out));
  });
  return *ptr;
}

CohomologyDims factor_forms_cohomology(const Factor& f, int p, int t) {
  static Memo<std::tuple<FactorKey, int, int>, CohomologyDims> memo;
  return memo.get({key_of(f), p, t}, [&] {
    CohomologyDims dims;
    const auto& levels = factor_kostant(f);
    if (p < 0 || p >= static_cast<int>(levels.size())) return dims;
    auto rs = f.root_system();
    for (Weight lambda : levels[p]) {
      lambda[f.node] += t;
      auto r = factor_bwb(*rs, lambda);
      if (r.regular) dims[r.degree] += rs->weyl_dim(r.mu);
    }
    return dims;
  });
}

// Torus character of the exterior powers of the cotangent fibre: entry j maps
// the weight -(sum of j distinct nilradical roots) to its multiplicity.
using Character = std::map<Weight, long long>;

const std::vector<Character>& cotangent_character(const Factor& f) {
  static Memo<FactorKey, std::shared_ptr<const std::vector<Character>>> memo;
  auto ptr = memo.get(key_of(f), [&] {
    auto rs = f.root_system();
    auto out = std::make_shared<std::vector<Character>>(1);
    (*out)[0][rs->zero()] = 1;
    for (const auto& beta : rs->positive_roots()) {
      if (beta[f.node - 1] == 0) continue;
      const Weight minus_beta = -rs->root_weight(beta);
      out->emplace_back();
      for (size_t j = out->size() - 1; j >= 1; --j)
        for (const auto& [w, m] : (*out)[j - 1]) (*out)[j][w + minus_beta] += m;
    }
    return std::shared_ptr<const std::vector<Character>>(std::move(out));
  });
  return *ptr;
}

BigInt factor_euler_char(const Factor& f, int p, int t) {
  static Memo<std::tuple<FactorKey, int, int>, BigInt> memo;
  return memo.get({key_of(f), p, t}, [&] {
    const auto& chars = cotangent_character(f);
    BigInt chi = 0;
    if (p < 0 || p >= static_cast<int>(chars.size())) return chi;
    auto rs = f.root_system();
    for (const auto& [w0, m] : chars[p]) {
      Weight w = w0;
      w[f.node] += t;
      auto r = factor_bwb(*rs, w);
      if (!r.regular) continue;
      BigInt d = rs->weyl_dim(r.mu) * m;
      chi += (r.degree % 2 == 0) ? d : BigInt(-d);
    }
    return chi;
  });
}

Twist checked_twist(const HomogSpace& space, const Twist& twist) {
  if (twist.empty()) return Twist(space.factors.size(), 0);
  if (twist.size() != space.factors.size())
    throw std::invalid_argument("twist length does not match the Picard rank of " + space.name);
  return twist;
}

// Calls visit(parts) for every split p = p_1 + ... + p_k with 0 <= p_i <= dims[i].
template <class F>
void for_each_split(const std::vector<int>& dims, int p, F&& visit) {
  std::vector<int> parts(dims.size(), 0);
  auto rec = [&](auto&& self, size_t i, int left) -> void {
    if (i + 1 == dims.size()) {
      if (left <= dims[i]) {
        parts[i] = left;
        visit(parts);
      }
      return;
    }
    for (int q = 0; q <= std::min(left, dims[i]); ++q) {
      parts[i] = q;
      self(self, i + 1, left - q);
    }
  };
  if (!dims.empty() && p >= 0) rec(rec, 0, p);
}

std::vector<int> factor_dims(const HomogSpace& space) {
  std::vector<int> d;
  for (const auto& f : space.factors) d.push_back(f.dimension());
  return d;
}

}  // namespace

IrreducibleBundle make_bundle(const HomogSpace& space, std::vector<Weight> hw, const Twist& twist) {
  check_space(space, hw);
  const Twist t = checked_twist(space, twist);
  for (size_t i = 0; i < hw.size(); ++i) hw[i][space.factors[i].node] += t[i];
  check_levi_dominant(space, hw);
  return IrreducibleBundle{&space, std::move(hw)};
}

IrreducibleBundle twisted(const IrreducibleBundle& b, const Twist& twist) {
  return make_bundle(*b.space, b.hw, twist);
}

bool CohomologyTable::operator==(const CohomologyTable& o) const {
  if (entries.size() != o.entries.size()) return false;
  for (auto a = entries.begin(), b = o.entries.begin(); a != entries.end(); ++a, ++b)
    if (a->first != b->first || a->second.highest != b->second.highest || a->second.dim != b->second.dim)
      return false;
  return true;
}

CohomologyTable bwb(const IrreducibleBundle& bundle) {
  if (!bundle.space) throw std::invalid_argument("bundle has no space");
  const auto& space = *bundle.space;
  check_space(space, bundle.hw);
  check_levi_dominant(space, bundle.hw);
  CohomologyGroup group{{}, 1};
  int degree = 0;
  for (size_t i = 0; i < bundle.hw.size(); ++i) {
    auto rs = space.factors[i].root_system();
    auto r = factor_bwb(*rs, bundle.hw[i]);
    if (!r.regular) return {};
    degree += r.degree;
    group.dim *= rs->weyl_dim(r.mu);
    group.highest.push_back(std::move(r.mu));
  }
  CohomologyTable table;
  table.entries.emplace(degree, std::move(group));
  return table;
}

IrreducibleBundle serre_dual(const IrreducibleBundle& bundle) {
  const auto& space = *bundle.space;
  std::vector<Weight> dual;
  for (size_t i = 0; i < bundle.hw.size(); ++i) {
    const auto& f = space.factors[i];
    auto rs = f.root_system();
    // Lowest weight of the Levi module: walk to the Levi-antidominant chamber.
    Weight w = bundle.hw[i];
    for (bool moved = true; moved;) {
      moved = false;
      for (int j = 1; j <= f.rank; ++j)
        if (j != f.node && w[j] > 0) {
          w = rs->simple_reflection(j, w);
          moved = true;
        }
    }
    Weight d = -w;
    d[f.node] -= f.index();
    dual.push_back(std::move(d));
  }
  return make_bundle(space, std::move(dual));
}

std::vector<IrreducibleBundle> kostant_forms(const HomogSpace& space, int p) {
  std::vector<IrreducibleBundle> out;
  const auto dims = factor_dims(space);
  std::vector<const std::vector<std::vector<Weight>>*> levels;
  for (const auto& f : space.factors) levels.push_back(&factor_kostant(f));
  for_each_split(dims, p, [&](const std::vector<int>& parts) {
    std::vector<Weight> hw(parts.size());
    auto rec = [&](auto&& self, size_t i) -> void {
      if (i == parts.size()) {
        out.push_back(make_bundle(space, hw));
        return;
      }
      for (const auto& w : (*levels[i])[parts[i]]) {
        hw[i] = w;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  });
  return out;
}

CohomologyDims forms_cohomology(const HomogSpace& space, int p, const Twist& twist) {
  const Twist t = checked_twist(space, twist);
  CohomologyDims total;
  for_each_split(factor_dims(space), p, [&](const std::vector<int>& parts) {
    CohomologyDims acc{{0, 1}};
    for (size_t i = 0; i < parts.size() && !acc.empty(); ++i) {
      auto fd = factor_forms_cohomology(space.factors[i], parts[i], t[i]);
      CohomologyDims next;
      for (const auto& [q1, d1] : acc)
        for (const auto& [q2, d2] : fd) next[q1 + q2] += d1 * d2;
      acc = std::move(next);
    }
    for (const auto& [q, d] : acc) total[q] += d;
  });
  return total;
}

CohomologyDims forms_cohomology(const HomogSpace& space, int p, int k) {
  return forms_cohomology(space, p, scaled_class(space, k));
}

BigInt euler_char(const HomogSpace& space, int p, const Twist& twist) {
  const Twist t = checked_twist(space, twist);
  BigInt chi = 0;
  for_each_split(factor_dims(space), p, [&](const std::vector<int>& parts) {
    BigInt term = 1;
    for (size_t i = 0; i < parts.size() && term != 0; ++i)
      term *= factor_euler_char(space.factors[i], parts[i], t[i]);
    chi += term;
  });
  return chi;
}

BigInt euler_char(const HomogSpace& space, int p, int k) {
  return euler_char(space, p, scaled_class(space, k));
}

BigInt alternating_sum(const CohomologyDims& dims) {
  BigInt s = 0;
  for (const auto& [q, d] : dims) s += (q % 2 == 0) ? d : BigInt(-d);
  return s;
}

// ---------------------------------------------------------------------------
// Fast paths

bool is_grassmannian(const HomogSpace& space) {
  return space.factors.size() == 1 && space.factors[0].series == Series::A;
}

bool is_spinor(const HomogSpace& space) {
  return space.factors.size() == 1 && space.factors[0].series == Series::D &&
         space.factors[0].rank >= 3 && space.factors[0].node == space.factors[0].rank;
}

namespace {

std::vector<int> parse_parts(std::string s) {
  std::vector<int> parts;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) return parts;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad partition '" + s + "'");
      parts.push_back(c - '0');
    }
  }
  return parts;
}

void check_partition(const std::vector<int>& parts, size_t max_len, const std::string& what) {
  if (parts.size() > max_len)
    throw std::invalid_argument(what + " has more than " + std::to_string(max_len) + " parts");
  for (size_t i = 0; i < parts.size(); ++i)
    if (parts[i] < 0 || (i && parts[i] > parts[i - 1]))
      throw std::invalid_argument(what + " is not a partition");
}

const Factor& single_factor(const HomogSpace& space, bool ok, const char* kind) {
  if (!ok) throw std::invalid_argument(space.name + " is not a " + kind);
  return space.factors[0];
}

// Type A core: ordinary epsilon sequence (not shifted), n = rank + 1.
CohomologyTable fastpath_a(const HomogSpace& space, std::vector<int> x) {
  const auto& f = space.factors[0];
  const int n = f.rank + 1;
  for (int i = 0; i < n; ++i) x[i] += n - 1 - i;
  std::vector<int> sorted = x;
  std::sort(sorted.rbegin(), sorted.rend());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x[i] < x[j]) ++inversions;
  // mu in the (Q-part, E-part) layout; the catalog numbers the diagram the
  // other way round, hence the reversal.
  Weight mu(std::vector<int>(f.rank));
  for (int i = 0; i < f.rank; ++i) {
    int a = (sorted[i] - (n - 1 - i)) - (sorted[i + 1] - (n - 2 - i));
    mu.coords[f.rank - 1 - i] = a;
  }
  CohomologyTable t;
  t.entries.emplace(inversions, CohomologyGroup{{mu}, f.root_system()->weyl_dim(mu)});
  return t;
}

std::vector<int> a_epsilon_from_weight(const Weight& w) {
  const int r = w.rank();
  std::vector<int> x(r + 1, 0);
  // w is in catalog numbering; a_i of the flipped layout is w[r + 1 - i].
  for (int i = r - 1; i >= 0; --i) x[i] = x[i + 1] + w.coords[r - 1 - i];
  return x;
}

Weight a_weight_from_epsilon(const std::vector<int>& x) {
  const int r = static_cast<int>(x.size()) - 1;
  Weight w(std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) w.coords[r - 1 - i] = x[i] - x[i + 1];
  return w;
}

}  // namespace

std::vector<int> d_epsilon2_from_weight(const Weight& w) {
  const int n = w.rank();
  if (n < 3) throw std::invalid_argument("type D weights need rank >= 3");
  std::vector<int> X(n);
  X[n - 1] = w[n] - w[n - 1];
  X[n - 2] = w[n] + w[n - 1];
  for (int i = n - 3; i >= 0; --i) X[i] = X[i + 1] + 2 * w.coords[i];
  return X;
}

Weight d_weight_from_epsilon2(const std::vector<int>& X) {
  const int n = static_cast<int>(X.size());
  if (n < 3) throw std::invalid_argument("type D weights need rank >= 3");
  Weight w(std::vector<int>(n, 0));
  for (int i = 0; i + 1 < n; ++i) {
    if ((X[i] - X[i + 1]) % 2 != 0)
      throw std::invalid_argument("doubled epsilon sequence mixes integral and half-integral entries");
    w.coords[i] = (X[i] - X[i + 1]) / 2;
  }
  if ((X[n - 2] + X[n - 1]) % 2 != 0)
    throw std::invalid_argument("doubled epsilon sequence is not a weight");
  w.coords[n - 1] = (X[n - 2] + X[n - 1]) / 2;
  return w;
}

GrassmannLabel parse_grassmann_label(const std::string& text) {
  GrassmannLabel label;
  bool seen_q = false, seen_e = false;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad Schur label '" + text + "'");
    std::string head = part.substr(0, colon);
    head.erase(std::remove_if(head.begin(), head.end(), [](unsigned char c) { return std::isspace(c); }),
               head.end());
    auto parts = parse_parts(part.substr(colon + 1));
    if (head == "Q*" || head == "Q^*") {
      label.qdual = parts;
      seen_q = true;
    } else if (head == "E") {
      label.e = parts;
      seen_e = true;
    } else {
      throw std::invalid_argument("bad Schur label factor '" + head + "' (expected Q* or E)");
    }
  }
  if (!seen_q && !seen_e) throw std::invalid_argument("empty Schur label");
  return label;
}

std::vector<int> grassmann_epsilon(const HomogSpace& space, const GrassmannLabel& label, int twist) {
  const auto& f = single_factor(space, is_grassmannian(space), "Grassmannian");
  const int n = f.rank + 1, k = f.node;
  check_partition(label.qdual, n - k, "Q* label");
  check_partition(label.e, k, "E label");
  std::vector<int> x(n, twist);
  for (size_t i = 0; i < label.qdual.size(); ++i) x[n - k - 1 - i] -= label.qdual[i];
  for (int i = 0; i < k; ++i) x[n - k + i] = i < static_cast<int>(label.e.size()) ? label.e[i] : 0;
  return x;
}

IrreducibleBundle grassmann_bundle(const HomogSpace& space, const GrassmannLabel& label, int twist) {
  return make_bundle(space, {a_weight_from_epsilon(grassmann_epsilon(space, label, twist))});
}

CohomologyTable fastpath_grassmann(const HomogSpace& space, const GrassmannLabel& label, int twist) {
  return fastpath_a(space, grassmann_epsilon(space, label, twist));
}

std::vector<int> spinor_epsilon2(const HomogSpace& space, const std::vector<int>& schur, int twist) {
  const auto& f = single_factor(space, is_spinor(space), "spinor variety");
  const int n = f.rank;
  check_partition(schur, n, "Schur label");
  std::vector<int> X(n, twist);
  for (size_t i = 0; i < schur.size(); ++i) X[n - 1 - i] -= 2 * schur[i];
  return X;
}

IrreducibleBundle spinor_bundle(const HomogSpace& space, const std::vector<int>& schur, int twist) {
  return make_bundle(space, {d_weight_from_epsilon2(spinor_epsilon2(space, schur, twist))});
}

IrreducibleBundle spinor_bundle_from_shifted(const HomogSpace& space, const std::vector<int>& shifted) {
  const auto& f = single_factor(space, is_spinor(space), "spinor variety");
  const int n = f.rank;
  if (static_cast<int>(shifted.size()) != n)
    throw std::invalid_argument("epsilon sequence must have " + std::to_string(n) + " entries");
  std::vector<int> X(n);
  for (int i = 0; i < n; ++i) X[i] = 2 * (shifted[i] - (n - 1 - i));
  return make_bundle(space, {d_weight_from_epsilon2(X)});
}

CohomologyTable fastpath_spinor_shifted2(const HomogSpace& space, const std::vector<int>& X) {
  const auto& f = single_factor(space, is_spinor(space), "spinor variety");
  const int n = f.rank;
  if (static_cast<int>(X.size()) != n)
    throw std::invalid_argument("epsilon sequence must have " + std::to_string(n) + " entries");
  int degree = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (X[i] == X[j] || X[i] == -X[j]) return {};
      if (X[i] + X[j] < 0) ++degree;
      if (X[i] < X[j]) ++degree;
    }
  std::vector<int> D(n);
  int negatives = 0;
  for (int i = 0; i < n; ++i) {
    D[i] = std::abs(X[i]);
    if (X[i] < 0) ++negatives;
  }
  std::sort(D.rbegin(), D.rend());
  // W(D_n) flips signs in pairs; an odd leftover lands on the smallest entry
  // (harmless when that entry is zero).
  if (negatives % 2 == 1 && D[n - 1] != 0) D[n - 1] = -D[n - 1];
  for (int i = 0; i < n; ++i) D[i] -= 2 * (n - 1 - i);
  Weight mu = d_weight_from_epsilon2(D);
  CohomologyTable t;
  t.entries.emplace(degree, CohomologyGroup{{mu}, f.root_system()->weyl_dim(mu)});
  return t;
}

CohomologyTable fastpath_spinor(const HomogSpace& space, const std::vector<int>& schur, int twist) {
  auto X = spinor_epsilon2(space, schur, twist);
  const int n = static_cast<int>(X.size());
  for (int i = 0; i < n; ++i) X[i] += 2 * (n - 1 - i);
  return fastpath_spinor_shifted2(space, X);
}

CohomologyTable fastpath(const IrreducibleBundle& bundle) {
  const auto& space = *bundle.space;
  check_levi_dominant(space, bundle.hw);
  if (is_grassmannian(space)) return fastpath_a(space, a_epsilon_from_weight(bundle.hw[0]));
  if (is_spinor(space)) {
    auto X = d_epsilon2_from_weight(bundle.hw[0]);
    const int n = static_cast<int>(X.size());
    for (int i = 0; i < n; ++i) X[i] += 2 * (n - 1 - i);
    return fastpath_spinor_shifted2(space, X);
  }
  throw std::invalid_argument("no fast path for " + space.name + " (needs a Grassmannian or a spinor variety)");
}

}  // namespace bwb
