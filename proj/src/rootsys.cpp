#include "bwb/rootsys.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bwb {

Series parse_series(char c) {
  switch (c) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'G':
      return static_cast<Series>(c);
    default:
      throw std::invalid_argument(std::string("unknown root system series '") + c + "'");
  }
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Weight::has_zero() const {
  return std::find(coords.begin(), coords.end(), 0) != coords.end();
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.coords.size() != coords.size())
    throw std::invalid_argument("weight rank mismatch");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.coords.size() != coords.size())
    throw std::invalid_argument("weight rank mismatch");
  for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << '(';
  for (size_t i = 0; i < w.coords.size(); ++i) os << (i ? "," : "") << w.coords[i];
  return os << ')';
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

namespace {

// Scaled inner products (alpha_i, alpha_j) of the simple roots, Bourbaki
// numbering. Short roots of B/C have norm 2 (long 4), G2 has 2 and 6.
std::vector<std::vector<int>> inner_products(Series s, int n) {
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { b[i - 1][j - 1] = b[j - 1][i - 1] = v; };
  switch (s) {
    case Series::A:
      for (int i = 1; i <= n; ++i) b[i - 1][i - 1] = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case Series::B:
      for (int i = 1; i < n; ++i) b[i - 1][i - 1] = 4;
      b[n - 1][n - 1] = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -2);
      break;
    case Series::C:
      for (int i = 1; i < n; ++i) b[i - 1][i - 1] = 2;
      b[n - 1][n - 1] = 4;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 1, n, -2);
      break;
    case Series::D:
      for (int i = 1; i <= n; ++i) b[i - 1][i - 1] = 2;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case Series::E:
      for (int i = 1; i <= n; ++i) b[i - 1][i - 1] = 2;
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case Series::G:
      b[0][0] = 2;
      b[1][1] = 6;
      link(1, 2, -3);
      break;
  }
  return b;
}

bool valid_pair(Series s, int n) {
  switch (s) {
    case Series::A: return n >= 1;
    case Series::B:
    case Series::C: return n >= 2;
    case Series::D: return n >= 3;
    case Series::E: return n == 6 || n == 7;
    case Series::G: return n == 2;
  }
  return false;
}

}  // namespace

RootSystem::RootSystem(Series series, int rank) : series_(series), rank_(rank) {
  if (!valid_pair(series, rank))
    throw std::invalid_argument("invalid root system " + std::string(1, to_char(series)) +
                                std::to_string(rank));
  inner_ = inner_products(series, rank);
  norms_.resize(rank);
  cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) norms_[i] = inner_[i][i];
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) cartan_[i][j] = 2 * inner_[i][j] / inner_[j][j];

  // Closure by root strings: for a positive root beta != alpha_i, the
  // alpha_i-string through beta is beta - p alpha_i, ..., beta + q alpha_i
  // with p - q = <beta, alpha_i^vee>.
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> level;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    level.push_back(e);
    known.insert(e);
  }
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    positive_.insert(positive_.end(), level.begin(), level.end());
    std::set<std::vector<int>> next;
    for (const auto& beta : level) {
      for (int i = 0; i < rank; ++i) {
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int k = 0; k < rank; ++k) pair += beta[k] * cartan_[k][i];
        int q = p - pair;
        if (q > 0) {
          std::vector<int> up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
}

RootSystemPtr RootSystem::get(Series series, int rank) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, RootSystemPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(to_char(series), rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rs = std::make_shared<const RootSystem>(series, rank);
  cache.emplace(key, rs);
  return rs;
}

std::string RootSystem::name() const { return std::string(1, to_char(series_)) + std::to_string(rank_); }

void RootSystem::check_node(int node) const {
  if (node < 1 || node > rank_)
    throw std::out_of_range("node " + std::to_string(node) + " out of range for " + name());
}

int RootSystem::root_norm(std::span<const int> root) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += root[i] * inner_[i][j] * root[j];
  return s;
}

int RootSystem::pairing(const Weight& lambda, std::span<const int> root) const {
  int num = 0;
  for (int i = 0; i < rank_; ++i) num += root[i] * lambda.coords[i] * norms_[i];
  int den = root_norm(root);
  if (num % den != 0) throw std::logic_error("non-integral coroot pairing");
  return num / den;
}

Weight RootSystem::root_weight(std::span<const int> root) const {
  Weight w = zero();
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w.coords[j] += root[i] * cartan_[i][j];
  return w;
}

Weight RootSystem::fundamental(int node) const {
  check_node(node);
  Weight w = zero();
  w[node] = 1;
  return w;
}

Weight RootSystem::simple_reflection(int node, const Weight& w) const {
  check_node(node);
  if (w.rank() != rank_) throw std::invalid_argument("weight rank mismatch for " + name());
  Weight r = w;
  const int c = w.coords[node - 1];
  if (c == 0) return r;
  const auto& row = cartan_[node - 1];
  for (int j = 0; j < rank_; ++j) r.coords[j] -= c * row[j];
  return r;
}

Weight RootSystem::apply(const ReducedWord& word, const Weight& w) const {
  Weight r = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = simple_reflection(*it, r);
  return r;
}

std::vector<WalkStep> RootSystem::dominance_walk(const Weight& w, const PivotChooser& choose) const {
  if (w.rank() != rank_) throw std::invalid_argument("weight rank mismatch for " + name());
  std::vector<WalkStep> steps;
  Weight cur = w;
  std::vector<int> negative;
  while (true) {
    negative.clear();
    for (int i = 0; i < rank_; ++i)
      if (cur.coords[i] < 0) negative.push_back(i + 1);
    if (negative.empty()) break;
    int node = choose ? choose(cur, negative) : negative.front();
    if (std::find(negative.begin(), negative.end(), node) == negative.end())
      throw std::logic_error("pivot chooser returned a non-negative node");
    cur = simple_reflection(node, cur);
    steps.push_back({node, cur});
  }
  return steps;
}

DominanceResult RootSystem::to_dominant(const Weight& w) const { return to_dominant(w, {}); }

DominanceResult RootSystem::to_dominant(const Weight& w, const PivotChooser& choose) const {
  auto steps = dominance_walk(w, choose);
  DominanceResult r;
  r.dominant = steps.empty() ? w : steps.back().weight;
  r.length = static_cast<int>(steps.size());
  r.singular = r.dominant.has_zero();
  return r;
}

bool RootSystem::regular_dominant(Weight w, Weight& dominant, int& length) const {
  if (w.rank() != rank_) throw std::invalid_argument("weight rank mismatch for " + name());
  length = 0;
  while (true) {
    int node = 0;
    for (int i = 0; i < rank_; ++i) {
      if (w.coords[i] == 0) return false;
      if (w.coords[i] < 0 && node == 0) node = i + 1;
    }
    if (node == 0) break;
    w = simple_reflection(node, w);
    ++length;
  }
  dominant = std::move(w);
  return true;
}

BigInt RootSystem::weyl_dim(const Weight& lambda) const {
  if (lambda.rank() != rank_) throw std::invalid_argument("weight rank mismatch for " + name());
  if (!lambda.is_dominant())
    throw std::invalid_argument("weyl_dim: weight " + to_string(lambda) + " is not dominant");
  return levi_dim(lambda, {});
}

BigInt RootSystem::levi_dim(const Weight& lambda, std::span<const int> marked) const {
  if (lambda.rank() != rank_) throw std::invalid_argument("weight rank mismatch for " + name());
  std::vector<bool> is_marked(rank_, false);
  for (int m : marked) {
    check_node(m);
    is_marked[m - 1] = true;
  }
  for (int i = 0; i < rank_; ++i)
    if (!is_marked[i] && lambda.coords[i] < 0)
      throw std::invalid_argument("levi_dim: weight " + to_string(lambda) + " is not Levi-dominant");
  const Weight shifted = lambda + rho();
  BigInt num = 1, den = 1;
  for (const auto& beta : positive_) {
    bool in_levi = true;
    for (int i = 0; i < rank_; ++i)
      if (is_marked[i] && beta[i] != 0) in_levi = false;
    if (!in_levi) continue;
    num *= pairing(shifted, beta);
    den *= pairing(rho(), beta);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension formula gave a non-integer");
  return num / den;
}

std::vector<std::vector<ReducedWord>> RootSystem::minimal_coset_reps(std::span<const int> marked) const {
  if (marked.empty()) throw std::invalid_argument("minimal_coset_reps: empty marked node set");
  Weight start = zero();
  for (int m : marked) {
    check_node(m);
    start[m] = 1;
  }
  // Orbit of the sum of marked fundamental weights. Reaching mu' = s_j mu
  // from mu with mu_j > 0 extends the minimal representative v of the
  // orbit point by s_j on the left; w = v^{-1} then has word = BFS path.
  std::vector<std::vector<ReducedWord>> out;
  std::map<Weight, ReducedWord> level{{start, {}}};
  std::set<Weight> seen{start};
  while (!level.empty()) {
    std::vector<ReducedWord> words;
    std::map<Weight, ReducedWord> next;
    for (const auto& [mu, word] : level) {
      words.push_back(word);
      for (int j = 1; j <= rank_; ++j) {
        if (mu[j] <= 0) continue;
        Weight nu = simple_reflection(j, mu);
        if (seen.count(nu)) continue;
        ReducedWord w2 = word;
        w2.push_back(j);
        auto [it, inserted] = next.emplace(nu, w2);
        if (!inserted && w2 < it->second) it->second = w2;
      }
    }
    for (const auto& kv : next) seen.insert(kv.first);
    std::sort(words.begin(), words.end());
    out.push_back(std::move(words));
    level = std::move(next);
  }
  return out;
}

std::vector<ReducedWord> RootSystem::minimal_coset_reps(std::span<const int> marked, int length) const {
  if (length < 0) throw std::invalid_argument("minimal_coset_reps: negative length");
  auto all = minimal_coset_reps(marked);
  if (length >= static_cast<int>(all.size())) return {};
  return all[length];
}

int RootSystem::nilradical_size(std::span<const int> marked) const {
  int count = 0;
  for (const auto& beta : positive_) {
    bool hit = false;
    for (int m : marked) hit = hit || beta[m - 1] != 0;
    count += hit;
  }
  return count;
}

bool RootSystem::is_cominuscule(int node) const {
  check_node(node);
  return highest_root()[node - 1] == 1;
}

}  // namespace bwb
