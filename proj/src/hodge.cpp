#include "bwb/hodge.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bwb/jacring.hpp"

namespace bwb {

namespace {

BigInt binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Twist plus(Twist a, const Twist& b, int scale = 1) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

std::string twist_text(const Twist& t) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  return os.str() + ')';
}

std::string big(const BigInt& v) { return v.str(); }

// Sums of line bundles O(-a): key a, value multiplicity.
using LineSum = std::map<Twist, BigInt>;

struct ConormalPowers {
  std::vector<LineSum> sym;    // Sym^k of the conormal bundle
  std::vector<LineSum> wedge;  // wedge^l, l = 0..#cuts
};

ConormalPowers conormal_powers(const HomogSpace& ambient, const std::vector<Twist>& cuts, int kmax) {
  std::map<Twist, int> classes;
  for (const auto& c : cuts) ++classes[c];
  const Twist zero(ambient.factors.size(), 0);
  ConormalPowers out;
  out.sym.assign(kmax + 1, {});
  out.sym[0][zero] = 1;
  out.wedge.assign(cuts.size() + 1, {});
  out.wedge[0][zero] = 1;
  for (const auto& [D, m] : classes) {
    std::vector<LineSum> sym(kmax + 1);
    for (int k1 = 0; k1 <= kmax; ++k1)
      for (const auto& [a, c] : out.sym[k1])
        for (int k2 = 0; k1 + k2 <= kmax; ++k2) sym[k1 + k2][plus(a, D, k2)] += c * binom(m + k2 - 1, k2);
    out.sym = std::move(sym);
    std::vector<LineSum> wedge(cuts.size() + 1);
    for (size_t l1 = 0; l1 < out.wedge.size(); ++l1)
      for (const auto& [a, c] : out.wedge[l1])
        for (int l2 = 0; l2 <= m && l1 + l2 < wedge.size(); ++l2) wedge[l1 + l2][plus(a, D, l2)] += c * binom(m, l2);
    out.wedge = std::move(wedge);
  }
  return out;
}

// chi(Sigma, Omega^j(t)); Kostant route when the forms split, torus
// character otherwise.
BigInt ambient_chi(const HomogSpace& space, int j, const Twist& t) {
  if (space.is_cominuscule()) return alternating_sum(forms_cohomology(space, j, t));
  return euler_char(space, j, t);
}

// Lower bound on the abutment of a spectral sequence with E1 total
// dimensions e(q) in total degree q.
BigInt abutment_lower(const BigInt& here, const BigInt& below, const BigInt& above) {
  BigInt lo = here - below - above;
  return lo > 0 ? lo : BigInt(0);
}

bool tighten(Interval& target, const BigInt& lo, const BigInt& hi) {
  bool changed = false;
  if (lo > target.lo) {
    target.lo = lo;
    changed = true;
  }
  if (hi < target.hi) {
    target.hi = hi;
    changed = true;
  }
  if (target.lo > target.hi) throw std::logic_error("Hodge chase reached contradictory bounds");
  return changed;
}

bool tighten(Interval& target, const Interval& by) { return tighten(target, by.lo, by.hi); }

// One pass of sum_q (-1)^q h^q = chi over a row of ranges.
bool euler_tighten(std::vector<Interval>& row, const BigInt& chi) {
  bool changed = false;
  const int n = static_cast<int>(row.size());
  for (int q = 0; q < n; ++q) {
    BigInt tmin = 0, tmax = 0;
    for (int r = 0; r < n; ++r) {
      if (r == q) continue;
      if (r % 2 == 0) {
        tmin += row[r].lo;
        tmax += row[r].hi;
      } else {
        tmin -= row[r].hi;
        tmax -= row[r].lo;
      }
    }
    const BigInt lo = (q % 2 == 0) ? chi - tmax : tmin - chi;
    const BigInt hi = (q % 2 == 0) ? chi - tmin : tmax - chi;
    changed = tighten(row[q], lo, hi) || changed;
  }
  return changed;
}

class SectionChase {
public:
  SectionChase(const SectionSpec& spec)
      : spec_(spec), ambient_(*spec.ambient), n_(spec.dimension()),
        powers_(conormal_powers(ambient_, spec.cuts, n_)) {}

  int n() const { return n_; }
  const ConormalPowers& powers() const { return powers_; }

  // H^t(X, Omega^j_Sigma(t)|X), t in [0, n]; bounds from the Koszul complex.
  const std::vector<Interval>& restricted(int j, const Twist& twist) {
    auto key = std::make_pair(j, twist);
    if (auto it = restricted_.find(key); it != restricted_.end()) return it->second;
    std::map<int, BigInt> e1;
    for (size_t l = 0; l < powers_.wedge.size(); ++l)
      for (const auto& [b, m] : powers_.wedge[l])
        for (const auto& [deg, d] : ambient(j, plus(twist, b, -1))) e1[deg - static_cast<int>(l)] += m * d;
    std::vector<Interval> out(n_ + 1);
    auto get = [&](int q) { auto it = e1.find(q); return it == e1.end() ? BigInt(0) : it->second; };
    for (int q = 0; q <= n_; ++q) out[q] = {abutment_lower(get(q), get(q - 1), get(q + 1)), get(q)};
    // The complex resolves a sheaf on X: its Euler characteristic is exact
    // and nothing survives outside degrees [0, n].
    BigInt chi = 0;
    for (const auto& [q, d] : e1) chi += (q % 2 == 0) ? d : BigInt(-d);
    while (euler_tighten(out, chi)) {
    }
    return restricted_.emplace(key, std::move(out)).first->second;
  }

  // Row p of the diamond: bounds on h^q(X, Omega^p_X) through the conormal
  // complex Sym^k N^* (x) Omega^{p-k}_Sigma|X.
  std::vector<Interval> forms_row(int p) {
    const Twist zero(ambient_.factors.size(), 0);
    std::vector<std::vector<Interval>> stage(p + 1, std::vector<Interval>(n_ + 1));
    for (int k = 0; k <= p; ++k)
      for (const auto& [a, m] : powers_.sym[k]) {
        const auto& r = restricted(p - k, plus(zero, a, -1));
        for (int t = 0; t <= n_; ++t) stage[k][t] += Interval{r[t].lo * m, r[t].hi * m};
      }
    auto total = [&](int q, bool upper) {
      BigInt s = 0;
      for (int k = 0; k <= p; ++k) {
        const int t = q + k;
        if (t < 0 || t > n_) continue;
        s += upper ? stage[k][t].hi : stage[k][t].lo;
      }
      return s;
    };
    std::vector<Interval> row(n_ + 1);
    for (int q = 0; q <= n_; ++q) {
      BigInt lo = total(q, false) - total(q - 1, true) - total(q + 1, true);
      row[q] = {lo > 0 ? lo : BigInt(0), total(q, true)};
    }
    const BigInt chi = forms_chi(p);
    while (euler_tighten(row, chi)) {
    }
    return row;
  }

  BigInt forms_chi(int p) {
    const Twist zero(ambient_.factors.size(), 0);
    BigInt chi = 0;
    for (int k = 0; k <= p; ++k)
      for (const auto& [a, m] : powers_.sym[k])
        for (size_t l = 0; l < powers_.wedge.size(); ++l)
          for (const auto& [b, mb] : powers_.wedge[l]) {
            BigInt term = m * mb * ambient_chi(ambient_, p - k, plus(plus(zero, a, -1), b, -1));
            chi += ((k + l) % 2 == 0) ? term : BigInt(-term);
          }
    return chi;
  }

  std::vector<std::string> provenance() const { return {facts_.begin(), facts_.end()}; }

private:
  const CohomologyDims& ambient(int j, const Twist& t) {
    auto key = std::make_pair(j, t);
    if (auto it = ambient_memo_.find(key); it != ambient_memo_.end()) return it->second;
    auto dims = forms_cohomology(ambient_, j, t);
    for (const auto& [q, d] : dims)
      facts_.insert("H^" + std::to_string(q) + "(" + ambient_.name + ", Omega^" + std::to_string(j) +
                    twist_text(t) + ") = " + big(d));
    return ambient_memo_.emplace(key, std::move(dims)).first->second;
  }

  const SectionSpec& spec_;
  const HomogSpace& ambient_;
  int n_;
  ConormalPowers powers_;
  std::map<std::pair<int, Twist>, CohomologyDims> ambient_memo_;
  std::map<std::pair<int, Twist>, std::vector<Interval>> restricted_;
  std::set<std::string> facts_;
};

// Iterates the enabled rules to a fixpoint.
void propagate(HodgeDiamond& D, const ChaseRules& rules, const std::vector<BigInt>& chi,
               const std::vector<BigInt>& ambient_h) {
  const int n = D.n;
  std::set<std::string> fired;
  if (rules.lefschetz) {
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        if (p + q == n) continue;
        BigInt v = 0;
        if (p == q) v = (p + q < n) ? ambient_h.at(p) : ambient_h.at(n - p);
        if (tighten(D.h[p][q], v, v)) fired.insert("lefschetz");
      }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        if (rules.serre && tighten(D.h[p][q], D.h[n - p][n - q])) {
          changed = true;
          fired.insert("serre");
        }
        if (rules.hodge_symmetry && tighten(D.h[p][q], D.h[q][p])) {
          changed = true;
          fired.insert("hodge-symmetry");
        }
      }
    if (!rules.euler) continue;
    for (int p = 0; p <= n; ++p)
      if (euler_tighten(D.h[p], chi[p])) {
        changed = true;
        fired.insert("euler");
      }
  }
  D.rules_fired.assign(fired.begin(), fired.end());
}

// F^{k+1} part of the middle row of a (2k+1)-dimensional variety.
BigInt upper_half(const std::vector<BigInt>& row_by_p) {
  const int dim = static_cast<int>(row_by_p.size()) - 1;
  BigInt s = 0;
  for (int p = dim / 2 + 1; p <= dim; ++p) s += row_by_p[p];
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string Interval::to_string() const {
  return is_exact() ? lo.str() : "[" + lo.str() + "," + hi.str() + "]";
}

void SectionSpec::validate() const {
  if (!ambient) throw std::invalid_argument("section spec has no ambient space");
  for (const auto& c : cuts) {
    if (c.size() != ambient->factors.size())
      throw std::invalid_argument("cut degree vector " + twist_text(c) + " does not match the Picard rank of " +
                                  ambient->name);
    for (int x : c)
      if (x < 1) throw std::invalid_argument("cut degree vector " + twist_text(c) + " must be positive");
  }
  if (static_cast<int>(cuts.size()) > ambient->dimension())
    throw std::invalid_argument("more cuts than the dimension of " + ambient->name);
  if (branch_degree && (*branch_degree < 2 || *branch_degree % 2 != 0))
    throw std::invalid_argument("branch degree must be a positive even number");
}

int SectionSpec::dimension() const { return ambient->dimension() - static_cast<int>(cuts.size()); }

Twist SectionSpec::anticanonical() const {
  Twist k = space_facts(*ambient).index_vector;
  for (const auto& c : cuts) k = plus(k, c, -1);
  return k;
}

bool SectionSpec::is_fano() const {
  auto k = anticanonical();
  return std::all_of(k.begin(), k.end(), [](int x) { return x > 0; });
}

bool SectionSpec::is_calabi_yau() const {
  auto k = anticanonical();
  return std::all_of(k.begin(), k.end(), [](int x) { return x == 0; });
}

std::string SectionSpec::describe() const {
  std::ostringstream os;
  if (branch_degree) os << "double cover of ";
  os << ambient->name;
  const Twist L = space_facts(*ambient).primitive_class;
  int linear = 0;
  std::vector<std::string> others;
  for (const auto& c : cuts) {
    if (c == L) {
      ++linear;
      continue;
    }
    int mult = c[0] / std::max(1, L[0]);
    bool scaled = true;
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] != mult * L[i]) scaled = false;
    others.push_back(scaled ? std::to_string(mult) : twist_text(c));
  }
  if (linear) os << " cap P" << (space_facts(*ambient).ambient_dim - linear).str();
  for (const auto& o : others) os << " cap (" << o << ")";
  if (branch_degree) os << " branched in degree " << *branch_degree;
  return os.str();
}

SectionSpec linear_section(const HomogSpace& space, int s) {
  SectionSpec spec{&space, std::vector<Twist>(s, space_facts(space).primitive_class), std::nullopt};
  spec.validate();
  return spec;
}

SectionSpec degree_section(const HomogSpace& space, const std::vector<int>& degrees) {
  SectionSpec spec{&space, {}, std::nullopt};
  for (int d : degrees) spec.cuts.push_back(scaled_class(space, d));
  spec.validate();
  return spec;
}

SectionSpec double_cover(const HomogSpace& space, int branch_degree, const std::vector<int>& base_degrees) {
  SectionSpec spec = degree_section(space, base_degrees);
  spec.branch_degree = branch_degree;
  spec.validate();
  return spec;
}

bool HodgeRow::is_exact() const {
  return std::all_of(entries.begin(), entries.end(), [](const Interval& i) { return i.is_exact(); });
}

BigInt HodgeRow::at(int p) const {
  const auto& e = entries.at(p);
  if (!e.is_exact()) throw std::logic_error("h^{" + std::to_string(p) + "," + std::to_string(n - p) +
                                            "} is only known to lie in " + e.to_string());
  return e.lo;
}

bool HodgeDiamond::is_exact() const {
  for (const auto& row : h)
    for (const auto& e : row)
      if (!e.is_exact()) return false;
  return true;
}

HodgeRow HodgeDiamond::middle_row() const {
  HodgeRow row{n, {}, provenance, euler_only};
  for (int p = 0; p <= n; ++p) row.entries.push_back(h[p][n - p]);
  return row;
}

std::vector<BigInt> ambient_hodge(const HomogSpace& space) {
  std::vector<BigInt> acc{1};
  for (const auto& f : space.factors) {
    const int marked[] = {f.node};
    auto levels = f.root_system()->minimal_coset_reps(marked);
    std::vector<BigInt> next(acc.size() + levels.size() - 1, 0);
    for (size_t i = 0; i < acc.size(); ++i)
      for (size_t j = 0; j < levels.size(); ++j) next[i + j] += acc[i] * static_cast<long>(levels[j].size());
    acc = std::move(next);
  }
  return acc;
}

HodgeDiamond section_diamond(const SectionSpec& spec, const ChaseRules& rules) {
  spec.validate();
  if (spec.branch_degree) return double_cover_diamond(spec);
  if (!spec.ambient->is_cominuscule())
    throw std::invalid_argument("the forms chase needs a cominuscule ambient space; " + spec.ambient->name +
                                " is not");
  if (!spec.is_fano() && !spec.is_calabi_yau())
    throw std::invalid_argument(spec.describe() + " is neither Fano nor Calabi-Yau");
  SectionChase chase(spec);
  HodgeDiamond D;
  D.n = chase.n();
  std::vector<BigInt> chi;
  for (int p = 0; p <= D.n; ++p) {
    D.h.push_back(chase.forms_row(p));
    chi.push_back(chase.forms_chi(p));
  }
  propagate(D, rules, chi, ambient_hodge(*spec.ambient));
  D.provenance = chase.provenance();
  return D;
}

HodgeRow section_hodge(const SectionSpec& spec, const ChaseRules& rules) {
  return section_diamond(spec, rules).middle_row();
}

std::vector<Interval> restricted_line_cohomology(const SectionSpec& spec, const Twist& twist) {
  spec.validate();
  SectionChase chase(spec);
  return chase.restricted(0, twist);
}

std::vector<Interval> tangent_cohomology(const HomogSpace& space, const Twist& twist) {
  if (static_cast<int>(twist.size()) != space.picard_rank())
    throw std::invalid_argument("twist has the wrong number of entries for " + space.name);
  const int dim = space.dimension();
  std::vector<Interval> total(dim + 1);
  for (size_t i = 0; i < space.factors.size(); ++i) {
    const Factor& f = space.factors[i];
    const auto rs = f.root_system();
    // Graded pieces of the tangent bundle of factor i, one per level of the
    // marked coefficient; each is irreducible with the highest root of that
    // level as highest weight.
    std::map<int, std::vector<int>> top;
    for (const auto& root : rs->positive_roots())
      if (const int k = root[f.node - 1]; k > 0) top[k] = root;  // roots are sorted by height
    std::map<int, BigInt> e1;
    bool trivial_top = false;
    for (const auto& [k, root] : top) {
      std::vector<Weight> hw;
      bool trivial = true;
      for (size_t j = 0; j < space.factors.size(); ++j) {
        const auto rj = space.factors[j].root_system();
        Weight w = j == i ? rs->root_weight(root) : rj->zero();
        w[space.factors[j].node] += twist[j];
        trivial = trivial && w.coords == rj->zero().coords;
        hw.push_back(std::move(w));
      }
      if (trivial && k > 1) trivial_top = true;
      for (const auto& [q, g] : bwb(make_bundle(space, std::move(hw))).entries) e1[q] += g.dim;
    }
    // A trivial piece O at level k > 1 sits in a non-split extension by the
    // level k - 1 piece ([g_1, g_-k] = g_-k+1), so d1 sends H^0(O) = C
    // injectively into H^1 of the level below.
    if (trivial_top) {
      if (e1[1] < 1) throw std::logic_error("non-split tangent extension without H^1 on " + space.name);
      e1[0] -= 1;
      e1[1] -= 1;
    }
    auto get = [&](int q) { auto it = e1.find(q); return it == e1.end() ? BigInt(0) : it->second; };
    for (int q = 0; q <= dim; ++q) total[q] += Interval{abutment_lower(get(q), get(q - 1), get(q + 1)), get(q)};
  }
  return total;
}

BigInt section_euler_char(const HomogSpace& ambient, const std::vector<Twist>& cuts, int j, const Twist& twist) {
  if (j < 0) return 0;
  const auto pw = conormal_powers(ambient, cuts, j);
  BigInt chi = 0;
  for (int k = 0; k <= j; ++k)
    for (const auto& [a, m] : pw.sym[k])
      for (size_t l = 0; l < pw.wedge.size(); ++l)
        for (const auto& [b, mb] : pw.wedge[l]) {
          BigInt term = m * mb * ambient_chi(ambient, j - k, plus(plus(twist, a, -1), b, -1));
          chi += ((k + l) % 2 == 0) ? term : BigInt(-term);
        }
  return chi;
}

HodgeDiamond double_cover_diamond(const SectionSpec& spec) {
  spec.validate();
  if (!spec.branch_degree) throw std::invalid_argument("double_cover_hodge needs a branch degree");
  const HomogSpace& S = *spec.ambient;
  const int d = *spec.branch_degree / 2;
  const Twist L = space_facts(S).primitive_class;
  // -K_Y is the pullback of -K_B - d L.
  Twist anti = plus(spec.anticanonical(), L, -d);
  if (!std::all_of(anti.begin(), anti.end(), [](int x) { return x > 0; }))
    throw std::invalid_argument(spec.describe() + " is not Fano");

  SectionSpec base{&S, spec.cuts, std::nullopt};
  HodgeDiamond D;
  if (spec.cuts.empty()) {
    D.n = S.dimension();
    auto ah = ambient_hodge(S);
    D.h.assign(D.n + 1, std::vector<Interval>(D.n + 1));
    for (int p = 0; p <= D.n; ++p) D.h[p][p] = Interval::exact(ah[p]);
  } else {
    D = section_diamond(base);
  }
  D.euler_only = !S.is_cominuscule();
  const int n = D.n;
  std::vector<Twist> branch_cuts = spec.cuts;
  branch_cuts.push_back(plus(Twist(L.size(), 0), L, 2 * d));
  const Twist minus_d = plus(Twist(L.size(), 0), L, -d);
  // The anti-invariant part sits in the middle degree; its row comes from
  // chi(Omega^p_B(log Z)(-d)) = chi(Omega^p_B(-d)) + chi(Omega^{p-1}_Z(-d)).
  for (int p = 0; p <= n; ++p) {
    BigInt chi = section_euler_char(S, spec.cuts, p, minus_d) + section_euler_char(S, branch_cuts, p - 1, minus_d);
    BigInt extra = ((n - p) % 2 == 0) ? chi : BigInt(-chi);
    if (extra < 0) throw std::logic_error("negative anti-invariant Hodge number for " + spec.describe());
    auto& cell = D.h[p][n - p];
    if (!cell.is_exact()) throw std::logic_error("base diamond of " + spec.describe() + " is not exact");
    cell = Interval::exact(cell.lo + extra);
    D.provenance.push_back("chi(log forms, p=" + std::to_string(p) + ") = " + big(chi));
  }
  D.rules_fired.push_back("euler");
  return D;
}

HodgeRow double_cover_hodge(const SectionSpec& spec) { return double_cover_diamond(spec).middle_row(); }

// ---------------------------------------------------------------------------

std::string route_name(Route r) {
  switch (r) {
    case Route::grassmannian: return "grassmannian";
    case Route::cohomological: return "cohomological";
    case Route::hypersurface_count: return "hypersurface-count";
    case Route::cayley_ci: return "cayley-ci";
    case Route::double_cover_count: return "double-cover-count";
    case Route::double_cover_tangent: return "double-cover-tangent";
  }
  return "?";
}

std::vector<Route> applicable_routes(const SectionSpec& spec) {
  if (spec.branch_degree) return spec.cuts.empty() ? std::vector<Route>{Route::double_cover_count, Route::double_cover_tangent}
                                                   : std::vector<Route>{};
  const Twist L = space_facts(*spec.ambient).primitive_class;
  bool linear = !spec.cuts.empty() &&
                std::all_of(spec.cuts.begin(), spec.cuts.end(), [&](const Twist& c) { return c == L; });
  if (linear) return {Route::grassmannian, Route::cohomological};
  return {Route::cohomological};
}

ModuliReport deformation_moduli(const SectionSpec& spec, Route route) {
  spec.validate();
  const auto facts = space_facts(*spec.ambient);
  ModuliReport rep;
  rep.route = route;
  rep.inputs["delta"] = facts.aut_dim;
  rep.assumptions.push_back("H^0(X, T Sigma|X) = aut(Sigma) and H^1(X, T Sigma|X) = 0");
  auto routes = applicable_routes(spec);
  if (std::find(routes.begin(), routes.end(), route) == routes.end())
    throw std::invalid_argument("route " + route_name(route) + " does not apply to " + spec.describe());
  switch (route) {
    case Route::grassmannian: {
      const long s = static_cast<long>(spec.cuts.size());
      const BigInt N1 = facts.ambient_dim + 1;
      rep.value = s * (N1 - s) - facts.aut_dim;
      rep.inputs["s"] = s;
      rep.inputs["N"] = facts.ambient_dim.str();
      break;
    }
    case Route::cohomological: {
      BigInt h0 = 0;
      nlohmann::ordered_json per_cut = nlohmann::ordered_json::array();
      for (const auto& D : spec.cuts) {
        auto h = restricted_line_cohomology(spec, D);
        if (!h[0].is_exact())
          throw std::runtime_error("h^0(X, O_X" + twist_text(D) + ") is not determined: " + h[0].to_string());
        h0 += h[0].lo;
        per_cut.push_back(h[0].lo.str());
      }
      rep.value = h0 - facts.aut_dim;
      rep.inputs["h0_normal"] = per_cut;
      break;
    }
    case Route::double_cover_count: {
      const int d2 = *spec.branch_degree;
      BigInt h0 = sections(*spec.ambient, scaled_class(*spec.ambient, d2));
      rep.value = h0 - 1 - facts.aut_dim;
      rep.inputs["h0_branch"] = h0.str();
      break;
    }
    case Route::double_cover_tangent: {
      // Invariant part: deformations of the branch divisor modulo Aut; the
      // anti-invariant part is H^1(T Sigma(-d)).
      const int d2 = *spec.branch_degree;
      if (d2 % 2 != 0) throw std::invalid_argument("branch degree must be even");
      BigInt h0 = sections(*spec.ambient, scaled_class(*spec.ambient, d2));
      const auto anti = tangent_cohomology(*spec.ambient, scaled_class(*spec.ambient, -d2 / 2));
      if (!anti.at(1).is_exact())
        throw std::runtime_error("h^1(T Sigma(-" + std::to_string(d2 / 2) + ")) is not determined: " +
                                 anti[1].to_string());
      rep.value = h0 - 1 - facts.aut_dim + anti[1].lo;
      rep.inputs["h0_branch"] = h0.str();
      rep.inputs["h1_anti_invariant"] = anti[1].lo.str();
      rep.assumptions.push_back("H^0(T Sigma(-log B)) = 0");
      break;
    }
    default:
      throw std::invalid_argument("route " + route_name(route) + " needs ci_moduli");
  }
  return rep;
}

ModuliReport ci_moduli(int N, const std::vector<int>& degrees) {
  if (N < 1 || degrees.empty()) throw std::invalid_argument("ci_moduli needs N >= 1 and at least one degree");
  for (int d : degrees)
    if (d < 2) throw std::invalid_argument("ci_moduli needs degrees >= 2");
  ModuliReport rep;
  rep.route = degrees.size() == 1 ? Route::hypersurface_count : Route::cayley_ci;
  BigInt sections_sum = 0, endo = 0;
  for (int di : degrees) {
    sections_sum += binom(N + di, di);
    for (int dj : degrees) endo += binom(N + di - dj, N);
  }
  const BigInt pgl = BigInt(N + 1) * (N + 1) - 1;
  rep.value = sections_sum - endo - pgl;
  rep.inputs["N"] = N;
  rep.inputs["degrees"] = degrees;
  rep.inputs["h0_E"] = sections_sum.str();
  rep.inputs["h0_End_E"] = endo.str();
  rep.inputs["dim_PGL"] = pgl.str();
  return rep;
}

ModuliReport double_cover_moduli(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("double_cover_moduli needs n >= 1 and d >= 1");
  ModuliReport rep;
  rep.route = Route::double_cover_count;
  const BigInt h0 = binom(n + 2 * d, 2 * d);
  const BigInt pgl = BigInt(n + 1) * (n + 1) - 1;
  rep.value = h0 - 1 - pgl;
  rep.inputs["n"] = n;
  rep.inputs["branch_degree"] = 2 * d;
  rep.inputs["h0_branch"] = h0.str();
  rep.inputs["dim_PGL"] = pgl.str();
  return rep;
}

// ---------------------------------------------------------------------------

bool in_series(const HomogSpace& space) { return space.dual_degree.has_value(); }

SeriesFacts series_facts(const HomogSpace& space) {
  if (!in_series(space)) throw std::invalid_argument(space.name + " is not in the dual-degree series");
  const auto f = space_facts(space);
  SeriesFacts s;
  s.r = f.index;
  s.c = f.coindex;
  s.s = s.r - s.c + 1;
  s.n = 2 * s.c - 1;
  return s;
}

BigInt closed_form_hcc1(int s, int c) {
  if (s < 1 || c < 2) throw std::invalid_argument("closed_form_hcc1 needs s >= 1 and c >= 2");
  return binom(s + c - 2, c - 1) - BigInt(s) * s;
}

BigInt closed_form_hcc1(const HomogSpace& space) {
  const auto f = series_facts(space);
  return closed_form_hcc1(f.s, f.c);
}

CohomologyCell lemma_nonvan_check(const HomogSpace& space) {
  const auto f = series_facts(space);
  auto dims = forms_cohomology(space, f.c - 2, f.c - f.r - 1);
  if (dims.size() != 1)
    throw std::logic_error("H^*(" + space.name + ", Omega^" + std::to_string(f.c - 2) + "(" +
                           std::to_string(f.c - f.r - 1) + ")) is not concentrated in one degree");
  return {dims.begin()->first, dims.begin()->second};
}

VanScan lemma_van_scan(const HomogSpace& space) {
  const auto f = series_facts(space);
  VanScan scan;
  for (int p = 0; p <= f.c - 1; ++p) {
    const int summands = static_cast<int>(kostant_forms(space, p).size());
    for (int k = 1; k <= f.r - p; ++k) {
      ++scan.cells;
      scan.bott_calls += summands;
      for (const auto& [q, d] : forms_cohomology(space, p, -k)) scan.nonzero.push_back({p, k, q, d});
    }
  }
  return scan;
}

CyVerdict cy_type_verdict(const HodgeDiamond& D, const ModuliReport& h1tx) {
  CyVerdict v;
  const int dim = D.n;
  if (dim % 2 == 0 || dim < 3) {
    v.clause1 = v.clause2 = v.clause3 = v.overall = "fail";
    v.notes.push_back("dimension " + std::to_string(dim) + " is not of the form 2n+1 with n >= 1");
    return v;
  }
  const int n = (dim - 1) / 2;
  auto status = [](std::initializer_list<std::pair<const Interval*, BigInt>> checks) {
    bool unknown = false;
    for (const auto& [iv, want] : checks) {
      if (!iv->contains(want)) return std::string("fail");
      if (!iv->is_exact()) unknown = true;
    }
    return std::string(unknown ? "inconclusive" : "pass");
  };
  auto combine = [](const std::vector<std::string>& parts) {
    if (std::find(parts.begin(), parts.end(), "fail") != parts.end()) return std::string("fail");
    if (std::find(parts.begin(), parts.end(), "inconclusive") != parts.end()) return std::string("inconclusive");
    return std::string("pass");
  };
  std::vector<std::string> c1{status({{&D.at(n + 2, n - 1), 1}})};
  for (int p = 2; n + p + 1 <= dim; ++p) c1.push_back(status({{&D.at(n + p + 1, n - p), 0}}));
  v.clause1 = combine(c1);
  v.clause2 = status({{&D.at(n + 1, n), h1tx.value}});
  std::vector<std::string> c3;
  for (int k = 1; k <= 2 * n; ++k) c3.push_back(status({{&D.at(k, 0), 0}}));
  v.clause3 = combine(c3);
  v.overall = combine({v.clause1, v.clause2, v.clause3});
  v.notes.push_back("condition (2) dimension-level only");
  return v;
}

DualReport dual_correspondence(const HomogSpace& space) {
  const auto f = series_facts(space);
  const auto facts = space_facts(space);
  DualReport rep;
  rep.x = space.name + " cap P" + BigInt(facts.ambient_dim - f.s).str();
  rep.projective_dim = f.s - 1;
  rep.degree = f.c - 1;
  const int M = rep.projective_dim, e = rep.degree;
  // The hypersurface of degree e in P^M is itself of Calabi-Yau type when
  // M = 2m and M + 1 = (m - 1) e; otherwise pass to the double cover.
  const bool hyper_ok = M % 2 == 0 && M + 1 == (M / 2 - 1) * e;
  WeightedHypersurface star;
  if (hyper_ok) {
    rep.x_star = degree_word(e) + " " + dim_word(M - 1);
    rep.x_star_moduli = ci_moduli(M, {e});
    star = {std::vector<int>(M + 1, 1), e};
  } else {
    if (e % 2 != 0) throw std::logic_error("no Calabi-Yau type partner for " + space.name);
    rep.x_star_double_cover = true;
    rep.x_star = "double " + degree_word(e) + " " + dim_word(M);
    rep.x_star_moduli = double_cover_moduli(M, e / 2);
    std::vector<int> w(M + 1, 1);
    w.push_back(e / 2);
    star = {w, e};
  }
  const auto spec = linear_section(space, f.s);
  rep.x_moduli = deformation_moduli(spec, Route::grassmannian);
  rep.agree = rep.x_moduli.value == rep.x_star_moduli.value;
  const auto row = section_hodge(spec);
  std::vector<BigInt> xrow;
  for (int p = 0; p <= row.n; ++p) xrow.push_back(row.at(p));
  rep.jacobian_dim_x = upper_half(xrow);
  // Primitive middle row of X*, reindexed by p in h^{p, dim-p}.
  const auto prim = steenbrink_hodge(star);
  std::vector<BigInt> srow(prim.dim + 1, 0);
  for (size_t j = 0; j < prim.entries.size(); ++j) srow[prim.dim - j] = prim.entries[j];
  rep.jacobian_dim_x_star = upper_half(srow);
  return rep;
}

}  // namespace bwb
