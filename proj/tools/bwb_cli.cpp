// bwb: cohomology of homogeneous bundles, Hodge numbers of sections and
// double covers, Jacobian rings, and the catalog reproduction report.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bwb/bott.hpp"
#include "bwb/catalog.hpp"
#include "bwb/hodge.hpp"
#include "bwb/jacring.hpp"
#include "bwb/report.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace bwb;

enum class Format { text, markdown, json, csv };

struct Common {
  bool json = false;
  bool csv = false;
  bool markdown = false;
  bool timestamp = false;

  Format format() const {
    if (json) return Format::json;
    if (csv) return Format::csv;
    if (markdown) return Format::markdown;
    return Format::text;
  }
};

std::string now_utc() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream os;
  os << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json envelope(const std::string& command, const Common& c) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  if (c.timestamp) j["generated_at"] = now_utc();
  return j;
}

void text_header(const Common& c) {
  if (c.timestamp) std::cout << "# generated " << now_utc() << '\n';
}

json big(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty entry in '" + text + "'");
    size_t used = 0;
    out.push_back(std::stoi(tok, &used));
    if (used != tok.size()) throw std::invalid_argument("not an integer: '" + tok + "'");
  }
  if (out.empty()) throw std::invalid_argument("expected a comma-separated list of integers");
  return out;
}

// "2" -> 2L; "1,2" -> O(1,2).
Twist parse_twist(const HomogSpace& space, const std::string& text) {
  const auto v = parse_ints(text);
  if (v.size() == 1) return scaled_class(space, v[0]);
  if (static_cast<int>(v.size()) != space.picard_rank())
    throw std::invalid_argument("twist needs 1 or " + std::to_string(space.picard_rank()) + " entries");
  return v;
}

std::string hw_text(const IrreducibleBundle& b) {
  std::string out;
  for (const auto& w : b.hw) out += (out.empty() ? "" : " x ") + to_string(w);
  return out;
}

std::string dims_text(const CohomologyDims& dims) {
  if (dims.empty()) return "acyclic";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, d] : dims) {
    os << (first ? "" : "; ") << "H^" << q << ", dim " << d;
    if (d == 1) os << " (H^" << q << " = C)";
    first = false;
  }
  return os.str();
}

CohomologyDims dims_of(const CohomologyTable& t) {
  CohomologyDims d;
  for (const auto& [q, g] : t.entries) d[q] += g.dim;
  return d;
}

// --------------------------------------------------------------------------
// bott

struct BottArgs {
  std::string space;
  std::optional<int> form;
  std::string weight;
  std::string schur;
  std::string twist = "0";
  bool trace = false;
  std::string pivots;
};

PivotChooser pivot_replay(const std::vector<int>& order) {
  auto pos = std::make_shared<size_t>(0);
  return [order, pos](const Weight& w, std::span<const int> negative) {
    if (*pos >= order.size())
      throw std::invalid_argument("pivot list exhausted before reaching a dominant weight");
    const int node = order[(*pos)++];
    if (std::find(negative.begin(), negative.end(), node) == negative.end())
      throw std::invalid_argument("pivot s" + std::to_string(node) + " does not act on a negative coordinate of " +
                                  to_string(w));
    return node;
  };
}

int cmd_bott(const BottArgs& a, const Common& c) {
  const Catalog& cat = Catalog::instance();
  const HomogSpace& space = cat.space(a.space);
  const int given = (a.form ? 1 : 0) + (a.weight.empty() ? 0 : 1) + (a.schur.empty() ? 0 : 1);
  if (given != 1) throw std::invalid_argument("give exactly one of --form, --weight, --schur");

  std::vector<IrreducibleBundle> summands;
  std::string what;
  if (a.form) {
    const Twist t = parse_twist(space, a.twist);
    for (const auto& b : kostant_forms(space, *a.form)) summands.push_back(twisted(b, t));
    what = "Omega^" + std::to_string(*a.form) + "(" + a.twist + ")";
  } else if (!a.weight.empty()) {
    std::vector<Weight> hw;
    std::istringstream is(a.weight);
    for (std::string part; std::getline(is, part, ';');) hw.emplace_back(parse_ints(part));
    summands.push_back(make_bundle(space, hw, parse_twist(space, a.twist)));
    what = "E[" + a.weight + "](" + a.twist + ")";
  } else {
    const int t = parse_ints(a.twist).at(0);
    if (is_grassmannian(space)) {
      summands.push_back(grassmann_bundle(space, parse_grassmann_label(a.schur), t));
    } else if (is_spinor(space)) {
      std::vector<int> parts;
      for (char ch : a.schur)
        if (std::isdigit(static_cast<unsigned char>(ch))) parts.push_back(ch - '0');
      if (a.schur.find(',') != std::string::npos) parts = parse_ints(a.schur);
      summands.push_back(spinor_bundle(space, parts, t));
    } else {
      throw std::invalid_argument("--schur needs a Grassmannian or a spinor variety");
    }
    what = "S[" + a.schur + "](" + a.twist + ")";
  }

  std::vector<int> pivots;
  if (!a.pivots.empty()) pivots = parse_ints(a.pivots);
  if ((a.trace || !pivots.empty()) && space.picard_rank() != 1)
    throw std::invalid_argument("--trace needs a space of Picard rank one");

  CohomologyDims total;
  json jsum = json::array();
  std::ostringstream text;
  text_header(c);
  text << space.name << ": " << what << ", " << summands.size() << " summand" << (summands.size() == 1 ? "" : "s")
       << '\n';
  for (const auto& b : summands) {
    const auto table = bwb::bwb(b);
    const auto dims = dims_of(table);
    for (const auto& [q, d] : dims) total[q] += d;
    text << "  E" << hw_text(b) << ": " << dims_text(dims) << '\n';
    json js;
    js["highest_weight"] = b.hw.front().coords;
    if (b.hw.size() > 1) {
      js["highest_weight"] = json::array();
      for (const auto& w : b.hw) js["highest_weight"].push_back(w.coords);
    }
    js["cohomology"] = json::object();
    for (const auto& [q, d] : dims) js["cohomology"][std::to_string(q)] = big(d);
    if (a.trace || !pivots.empty()) {
      const RootSystemPtr rsp = space.factors.front().root_system();
      const RootSystem& rs = *rsp;
      const Weight start = b.hw.front() + rs.rho();
      const auto steps = rs.dominance_walk(start, pivots.empty() ? PivotChooser{} : pivot_replay(pivots));
      const Weight end = steps.empty() ? start : steps.back().weight;
      text << render_walk(rs, start, steps);
      text << "  " << steps.size() << " reflections, ends at " << to_string(end);
      if (end == rs.rho()) text << " = rho";
      else if (end.has_zero()) text << " (on a wall)";
      text << '\n';
      json jt = json::array();
      for (const auto& s : steps) jt.push_back({{"node", s.node}, {"weight", s.weight.coords}});
      js["trace"] = {{"start", start.coords}, {"steps", jt}};
    }
    jsum.push_back(js);
  }
  text << "total: " << dims_text(total) << '\n';

  if (c.format() == Format::json) {
    json j = envelope("bott", c);
    j["space"] = space.name;
    j["bundle"] = what;
    j["summands"] = jsum;
    j["total"] = json::object();
    for (const auto& [q, d] : total) j["total"][std::to_string(q)] = big(d);
    std::cout << j.dump() << '\n';
  } else if (c.format() == Format::csv) {
    std::cout << "degree,dim\n";
    for (const auto& [q, d] : total) std::cout << q << ',' << d << '\n';
  } else {
    std::cout << text.str();
  }
  return 0;
}

// --------------------------------------------------------------------------
// hodge / moduli

struct SectionArgs {
  std::string space;
  std::string cut;
  int linear = 0;
  int branch = 0;
  bool diamond = false;
  bool all_routes = false;
};

SectionSpec build_spec(const SectionArgs& a) {
  const HomogSpace& space = Catalog::instance().space(a.space);
  std::vector<int> degrees;
  if (!a.cut.empty()) degrees = parse_ints(a.cut);
  SectionSpec spec = degree_section(space, degrees);
  for (int i = 0; i < a.linear; ++i) spec.cuts.push_back(space_facts(space).primitive_class);
  if (a.branch) spec.branch_degree = a.branch;
  spec.validate();
  return spec;
}

std::string join(const std::vector<Interval>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : " ") + x.to_string();
  return out;
}

int cmd_hodge(const SectionArgs& a, const Common& c) {
  const SectionSpec spec = build_spec(a);
  const HodgeDiamond D = spec.branch_degree ? double_cover_diamond(spec) : section_diamond(spec);
  const HodgeRow row = D.middle_row();
  const int n = D.n;
  std::vector<Interval> upper;
  for (int p = n; 2 * p >= n + (n % 2); --p) upper.push_back(row.entries[p]);
  std::vector<Interval> full;
  for (int p = n; p >= 0; --p) full.push_back(row.entries[p]);

  switch (c.format()) {
    case Format::json: {
      json j = envelope("hodge", c);
      j["variety"] = spec.describe();
      j["dimension"] = n;
      j["euler_only"] = D.euler_only;
      j["middle_row"] = json::array();
      for (const auto& x : full) j["middle_row"].push_back(x.is_exact() ? big(x.lo) : json(x.to_string()));
      if (a.diamond) {
        j["diamond"] = json::array();
        for (int p = 0; p <= n; ++p) {
          json r = json::array();
          for (int q = 0; q <= n; ++q) r.push_back(D.at(p, q).is_exact() ? big(D.at(p, q).lo) : json(D.at(p, q).to_string()));
          j["diamond"].push_back(r);
        }
      }
      j["rules_fired"] = D.rules_fired;
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::csv:
      std::cout << "p,q,value\n";
      for (int p = n; p >= 0; --p) std::cout << p << ',' << n - p << ',' << row.entries[p].to_string() << '\n';
      break;
    case Format::markdown: {
      std::cout << "| p | q | h^{p,q} |\n|---|---|---|\n";
      for (int p = n; p >= 0; --p)
        std::cout << "| " << p << " | " << n - p << " | " << row.entries[p].to_string() << " |\n";
      break;
    }
    case Format::text: {
      text_header(c);
      std::cout << spec.describe() << ", dimension " << n << (D.euler_only ? " (Euler characteristics only)" : "")
                << '\n';
      if (a.diamond)
        for (int p = 0; p <= n; ++p) {
          std::vector<Interval> r(D.h[p].begin(), D.h[p].end());
          std::cout << "  h^{" << p << ",*}: " << join(r) << '\n';
        }
      std::cout << "h^{" << n << ",0} .. h^{0," << n << "}: " << join(full) << '\n';
      std::cout << "h^{" << n << ",0} .. h^{" << n - (static_cast<int>(upper.size()) - 1) << ','
                << static_cast<int>(upper.size()) - 1 << "}: " << join(upper) << '\n';
      break;
    }
  }
  return 0;
}

int cmd_moduli(const SectionArgs& a, const Common& c) {
  const SectionSpec spec = build_spec(a);
  std::vector<std::pair<std::string, BigInt>> values;
  for (Route r : applicable_routes(spec)) {
    values.emplace_back(route_name(r), deformation_moduli(spec, r).value);
    if (!a.all_routes) break;
  }
  if (values.empty()) throw std::invalid_argument("no moduli route applies to " + spec.describe());
  if (a.all_routes && !spec.branch_degree && in_series(*spec.ambient) &&
      static_cast<int>(spec.cuts.size()) == series_facts(*spec.ambient).s) {
    const auto f = series_facts(*spec.ambient);
    values.emplace_back("closed-form", closed_form_hcc1(*spec.ambient));
    const auto row = section_hodge(spec);
    values.emplace_back("h^{c,c-1}", row.at(f.c));
  }
  switch (c.format()) {
    case Format::json: {
      json j = envelope("moduli", c);
      j["variety"] = spec.describe();
      j["values"] = json::object();
      for (const auto& [k, v] : values) j["values"][k] = big(v);
      std::cout << j.dump() << '\n';
      break;
    }
    case Format::csv:
      std::cout << "route,value\n";
      for (const auto& [k, v] : values) std::cout << k << ',' << v << '\n';
      break;
    default: {
      text_header(c);
      std::string eq, names;
      for (size_t i = 0; i < values.size(); ++i) {
        if (i) eq += values[i].second == values[i - 1].second ? " = " : " != ";
        eq += values[i].second.str();
        names += (i ? ", " : "") + values[i].first;
      }
      std::cout << spec.describe() << ": " << eq << "  (" << names << ")\n";
    }
  }
  return 0;
}

// --------------------------------------------------------------------------
// jacring

struct JacArgs {
  std::string weights;
  int degree = 0;
  std::optional<int> at;
  bool scan = false;
  int max_dim = 7;
  int max_weight = 2;
  int max_degree = 8;
};

int cmd_jacring(const JacArgs& a, const Common& c) {
  if (a.scan) {
    const auto rows = weighted_cy_scan(a.max_dim, a.max_weight, a.max_degree);
    if (c.format() == Format::json) {
      for (const auto& r : rows) {
        json j = envelope("jacring", c);
        j["dim"] = r.dim;
        j["weights"] = r.X.weights;
        j["degree"] = r.X.degree;
        j["moduli"] = big(r.moduli);
        j["vetted"] = r.vetted;
        std::cout << j.dump() << '\n';
      }
    } else {
      text_header(c);
      std::cout << "dim  w  d  moduli  X\n";
      for (const auto& r : rows)
        std::cout << r.dim << "  " << r.X.weights_text() << "  " << r.X.degree << "  " << r.moduli << "  "
                  << describe(r.X) << (r.vetted ? "" : "  (unvetted)") << '\n';
    }
    return 0;
  }
  if (a.weights.empty() || a.degree == 0) throw std::invalid_argument("--weights and --degree are required");
  const WeightedHypersurface X{parse_ints(a.weights), a.degree};
  X.validate();
  if (a.at) {
    const BigInt v = jacobian_hilbert(X, *a.at);
    if (c.format() == Format::json) {
      json j = envelope("jacring", c);
      j["weights"] = X.weights;
      j["degree"] = X.degree;
      j["k"] = *a.at;
      j["value"] = big(v);
      std::cout << j.dump() << '\n';
    } else {
      text_header(c);
      std::cout << v << '\n';
    }
    return 0;
  }
  const auto row = steenbrink_hodge(X);
  if (c.format() == Format::json) {
    json j = envelope("jacring", c);
    j["weights"] = X.weights;
    j["degree"] = X.degree;
    j["primitive_row"] = json::array();
    for (const auto& v : row.entries) j["primitive_row"].push_back(big(v));
    std::cout << j.dump() << '\n';
  } else if (c.format() == Format::csv) {
    std::cout << "p,q,value\n";
    for (size_t i = 0; i < row.entries.size(); ++i)
      std::cout << row.dim - static_cast<int>(i) << ',' << i << ',' << row.entries[i] << '\n';
  } else {
    text_header(c);
    std::cout << describe(X) << ", primitive h^{" << row.dim << ",0} .. h^{0," << row.dim << "}:";
    for (const auto& v : row.entries) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return 0;
}

// --------------------------------------------------------------------------
// verify-paper

int cmd_verify(const std::string& table, unsigned workers, const Common& c) {
  VerifyOptions opts;
  if (!table.empty()) opts.table = table;
  opts.workers = workers;
  const auto cells = verify_paper(Catalog::instance(), opts);
  switch (c.format()) {
    case Format::json:
      if (c.timestamp) std::cout << envelope("verify-paper", c).dump() << '\n';
      std::cout << render_jsonl(cells);
      break;
    case Format::csv:
      std::cout << render_csv(cells);
      break;
    default:
      text_header(c);
      std::cout << render_text(cells);
  }
  return exit_status(cells);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of homogeneous bundles and Hodge numbers of their sections"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "JSON output");
    sub->add_flag("--csv", common.csv, "CSV output");
    sub->add_flag("--markdown", common.markdown, "Markdown output");
    sub->add_flag("--timestamp", common.timestamp, "Stamp the output with the current time");
  };

  BottArgs bott;
  auto* b = app.add_subcommand("bott", "Cohomology of an irreducible bundle or of Omega^p");
  b->add_option("--space", bott.space, "Catalog space")->required();
  b->add_option("--form", bott.form, "Bundle of p-forms");
  b->add_option("--weight", bott.weight, "Highest weight, fundamental coordinates (';' between factors)");
  b->add_option("--schur", bott.schur, "Schur label, e.g. \"Q*:1111;E:4\" or \"222\"");
  b->add_option("--twist", bott.twist, "Twist by O(k), or per factor k1,k2,...");
  b->add_flag("--trace", bott.trace, "Print the reflection walk");
  b->add_option("--pivots", bott.pivots, "Replay the walk with these pivots, e.g. 1,3,4");
  add_common(b);

  SectionArgs sec;
  auto* h = app.add_subcommand("hodge", "Middle Hodge numbers of a section or double cover");
  auto* m = app.add_subcommand("moduli", "Moduli count of a section or double cover");
  for (auto* sub : {h, m}) {
    sub->add_option("--space", sec.space, "Catalog space")->required();
    sub->add_option("--cut", sec.cut, "Hypersurface degrees d1,d2,...");
    sub->add_option("--linear", sec.linear, "Number of hyperplane sections");
    sub->add_option("--branch", sec.branch, "Branch degree of a double cover");
    add_common(sub);
  }
  h->add_flag("--diamond", sec.diamond, "Print the full diamond");
  m->add_flag("--all-routes", sec.all_routes, "Compute every applicable route");

  JacArgs jac;
  auto* j = app.add_subcommand("jacring", "Jacobian ring of a weighted hypersurface");
  j->add_option("--weights", jac.weights, "Weights w0,...,wn");
  j->add_option("--degree", jac.degree, "Degree d");
  j->add_option("--at", jac.at, "Hilbert function at k");
  j->add_flag("--scan", jac.scan, "Scan weighted Calabi-Yau type hypersurfaces");
  j->add_option("--max-dim", jac.max_dim, "Scan: largest dimension");
  j->add_option("--max-weight", jac.max_weight, "Scan: largest weight");
  j->add_option("--max-degree", jac.max_degree, "Scan: largest degree");
  add_common(j);

  std::string table;
  unsigned workers = 0;
  auto* v = app.add_subcommand("verify-paper", "Compare every catalog cell with its computed value");
  v->add_option("--table", table, "Restrict to one table or claim group");
  v->add_option("--workers", workers, "Worker threads (0: all cores)");
  add_common(v);

  CLI11_PARSE(app, argc, argv);
  try {
    if (b->parsed()) return cmd_bott(bott, common);
    if (h->parsed()) return cmd_hodge(sec, common);
    if (m->parsed()) return cmd_moduli(sec, common);
    if (j->parsed()) return cmd_jacring(jac, common);
    if (v->parsed()) return cmd_verify(table, workers, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
