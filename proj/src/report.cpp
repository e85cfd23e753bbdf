#include "bwb/report.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bwb/bott.hpp"
#include "bwb/hodge.hpp"
#include "bwb/jacring.hpp"

namespace bwb {

using json = nlohmann::ordered_json;

std::string status_name(CellStatus s) {
  switch (s) {
    case CellStatus::match: return "match";
    case CellStatus::mismatch: return "mismatch";
    case CellStatus::fixture_absent: return "fixture-absent";
    case CellStatus::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

CellStatus parse_status(const std::string& s) {
  for (auto st : {CellStatus::match, CellStatus::mismatch, CellStatus::fixture_absent, CellStatus::indeterminate})
    if (status_name(st) == s) return st;
  throw std::invalid_argument("unknown cell status '" + s + "'");
}

CellStatus classify(const std::optional<json>& fixture, const json& computed) {
  if (computed.is_null()) return CellStatus::indeterminate;
  if (!fixture) return CellStatus::fixture_absent;
  return *fixture == computed ? CellStatus::match : CellStatus::mismatch;
}

namespace {

json num(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

// Exact intervals become numbers; ranges stay as text so they never match.
json value_of(const Interval& iv) { return iv.is_exact() ? num(iv.lo) : json(iv.to_string()); }

struct RowResult {
  std::map<std::string, json> values;
  std::map<std::string, std::string> notes;
  std::string row_note;
};

using RowJob = std::function<RowResult(const Catalog&, const std::string& row)>;

int inverse_word(const std::string& word, const std::function<std::string(int)>& f) {
  for (int i = 1; i < 64; ++i)
    if (f(i) == word) return i;
  throw std::invalid_argument("unrecognised word '" + word + "'");
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

// "OP2 cap P17" -> (OP2, s = N - 17).
std::pair<const HomogSpace*, int> parse_section_label(const Catalog& cat, const std::string& label) {
  const auto at = label.find(" cap P");
  if (at == std::string::npos) return {&cat.space(label), 0};
  const HomogSpace& space = cat.space(label.substr(0, at));
  const long k = std::stol(label.substr(at + 6));
  const BigInt s = space_facts(space).ambient_dim - k;
  return {&space, static_cast<int>(s)};
}

std::string join_route_values(const SectionSpec& spec, bool& agree, BigInt& value) {
  std::ostringstream os;
  agree = true;
  bool first = true;
  for (Route r : applicable_routes(spec)) {
    const BigInt v = deformation_moduli(spec, r).value;
    if (first) value = v;
    else if (v != value) agree = false;
    os << (first ? "" : ", ") << route_name(r) << "=" << v;
    first = false;
  }
  if (first) throw std::logic_error("no moduli route applies to " + spec.describe());
  return os.str();
}

void put_moduli(RowResult& out, const std::string& column, const SectionSpec& spec) {
  bool agree = true;
  BigInt v;
  const std::string routes = join_route_values(spec, agree, v);
  out.values[column] = agree ? num(v) : json();
  out.notes[column] = routes;
}

RowResult weighted_row(const Catalog&, const std::string& label) {
  RowResult out;
  auto words = split_words(label);
  const auto section_at = label.find(" section of Q^");
  if (section_at != std::string::npos) {
    const int e = inverse_word(label.substr(0, section_at), degree_word);
    const int k = std::stoi(label.substr(section_at + 14));
    const auto rep = ci_moduli(k + 1, {2, e});
    out.values["n-1"] = k - 1;
    out.values["w"] = "1^" + std::to_string(k + 2);
    out.values["d"] = "2," + std::to_string(e);
    out.values["moduli"] = num(rep.value);
    out.values["X"] = degree_word(e) + " section of Q^" + std::to_string(k);
    out.notes["moduli"] = "complete intersection (2," + std::to_string(e) + ") in P^" + std::to_string(k + 1);
    return out;
  }
  const bool dbl = !words.empty() && words.front() == "double";
  if (dbl) words.erase(words.begin());
  if (words.size() != 2) throw std::invalid_argument("cannot parse variety name '" + label + "'");
  const int d = inverse_word(words[0], degree_word);
  const int dim = inverse_word(words[1], dim_word);
  WeightedHypersurface X;
  if (dbl) {
    if (d % 2 != 0) throw std::invalid_argument("double cover branched in odd degree: " + label);
    X = {std::vector<int>(dim + 1, 1), d};
    X.weights.push_back(d / 2);
  } else {
    X = {std::vector<int>(dim + 2, 1), d};
  }
  out.values["n-1"] = X.ambient_dim() - 1;
  out.values["w"] = X.weights_text();
  out.values["d"] = std::to_string(d);
  out.values["moduli"] = num(jacobian_hilbert(X, d));
  out.values["X"] = describe(X);
  const auto check = dbl ? double_cover_moduli(dim, d / 2) : ci_moduli(dim + 1, {d});
  out.notes["moduli"] = "Jacobian ring degree " + std::to_string(d) + "; parameter count " + check.value.str();
  return out;
}

RowResult section_table_row(const Catalog& cat, const std::string& label, int degree) {
  RowResult out;
  const HomogSpace& space = cat.space(label);
  const auto facts = space_facts(space);
  out.values["Sigma"] = space.name;
  out.values["dim"] = facts.dim;
  out.values["index"] = facts.index;
  if (degree == 1) {
    put_moduli(out, "moduli", linear_section(space, 1));
  } else if (facts.dim % 2 == 0) {
    put_moduli(out, "moduli", degree_section(space, {degree}));
  } else {
    const auto rep = deformation_moduli(double_cover(space, degree), Route::double_cover_count);
    out.values["moduli"] = num(rep.value);
    out.notes["moduli"] = "branch divisors of the double cover modulo automorphisms";
  }
  return out;
}

RowResult series_row(const Catalog& cat, const std::string& label) {
  RowResult out;
  const HomogSpace& space = cat.space(label);
  if (!in_series(space)) throw std::invalid_argument(label + " is not in the series");
  const auto f = series_facts(space);
  const auto facts = space_facts(space);
  out.values["Sigma"] = space.name;
  out.values["dim"] = facts.dim;
  out.values["index"] = f.r;
  out.values["coindex"] = f.c;
  out.values["deg"] = f.c - 1;
  return out;
}

RowResult moduli43_row(const Catalog& cat, const std::string& label) {
  RowResult out;
  const HomogSpace& space = cat.space(label);
  const auto f = series_facts(space);
  const auto facts = space_facts(space);
  out.values["Sigma"] = space.name;
  out.values["s"] = f.s;
  out.values["N"] = num(facts.ambient_dim);
  out.values["Aut"] = aut_name(space);
  out.values["delta"] = facts.aut_dim;
  put_moduli(out, "m", linear_section(space, f.s));
  return out;
}

RowResult dual_row(const Catalog& cat, const std::string& label) {
  RowResult out;
  const auto rep = dual_correspondence(cat.space(label));
  out.values["Sigma"] = label;
  out.values["X"] = rep.x;
  out.values["X*"] = rep.x_star;
  return out;
}

RowResult top_class_row(const Catalog& cat, const std::string& label) {
  RowResult out;
  const auto cell = lemma_nonvan_check(cat.space(label));
  out.values["degree"] = cell.degree;
  out.values["dim"] = num(cell.dim);
  return out;
}

RowResult vanishing_row(const Catalog& cat, const std::string& label) {
  RowResult out;
  const auto scan = lemma_van_scan(cat.space(label));
  std::ostringstream cells;
  for (size_t i = 0; i < scan.nonzero.size(); ++i) {
    const auto& c = scan.nonzero[i];
    cells << (i ? "; " : "") << '(' << c.p << ',' << c.k << ',' << c.q << ',' << c.dim << ')';
  }
  out.values["nonzero_cells"] = static_cast<long long>(scan.nonzero.size());
  out.values["cell"] = cells.str();
  out.row_note = std::to_string(scan.cells) + " (p,k) cells, " + std::to_string(scan.bott_calls) + " summands";
  return out;
}

RowResult series_section_row(const Catalog& cat, const std::string& label) {
  RowResult out;
  const HomogSpace& space = cat.space(label);
  const auto f = series_facts(space);
  const auto spec = linear_section(space, f.s);
  const auto D = section_diamond(spec);
  const auto row = D.middle_row();
  out.values["h^{c+1,c-2}"] = value_of(row.entries.at(f.c + 1));
  out.values["h^{c,c-1}"] = value_of(row.entries.at(f.c));
  out.values["closed_form"] = num(closed_form_hcc1(space));
  const auto coh = deformation_moduli(spec, Route::cohomological);
  out.values["cohomological"] = num(coh.value);
  const auto grass = deformation_moduli(spec, Route::grassmannian);
  out.notes["cohomological"] = "grassmannian route " + grass.value.str();
  out.values["verdict"] = cy_type_verdict(D, grass).overall;
  return out;
}

void put_verdict(RowResult& out, const HodgeDiamond& D, const SectionSpec& spec) {
  const auto routes = applicable_routes(spec);
  if (routes.empty()) return;
  const Route route = spec.branch_degree ? Route::double_cover_tangent : routes.front();
  const auto v = cy_type_verdict(D, deformation_moduli(spec, route));
  out.values["verdict"] = v.overall;
  out.notes["verdict"] = "clause 1 " + v.clause1 + ", clause 2 " + v.clause2 + ", clause 3 " + v.clause3;
}

RowResult quadric_section_row(const Catalog& cat, const std::string& label) {
  RowResult out;
  const auto spec = degree_section(cat.space(label), {2});
  const auto D = section_diamond(spec);
  const int n = D.n;
  for (int p = n; 2 * p > n; --p)
    out.values["h^{" + std::to_string(p) + "," + std::to_string(n - p) + "}"] = value_of(D.at(p, n - p));
  put_verdict(out, D, spec);
  return out;
}

RowResult lg36_row(const Catalog& cat, const std::string& label) {
  RowResult out;
  const auto [space, s] = parse_section_label(cat, label);
  const auto D = section_diamond(linear_section(*space, s));
  std::ostringstream mid;
  for (int p = 0; p <= D.n; ++p) {
    out.values["h^{" + std::to_string(p) + "," + std::to_string(p) + "}"] = value_of(D.at(p, p));
    mid << (p ? " " : "") << D.at(p, D.n - p).to_string();
  }
  out.values["middle_row"] = mid.str();
  return out;
}

RowResult double_cover_row(const Catalog& cat, const std::string& label) {
  RowResult out;
  const auto [space, s] = parse_section_label(cat, label);
  const auto spec = double_cover(*space, 2, std::vector<int>(s, 1));
  const auto D = double_cover_diamond(spec);
  const int m = (D.n - 1) / 2;
  out.values["h^{m+2,m-1}"] = value_of(D.at(m + 2, m - 1));
  out.notes["h^{m+2,m-1}"] = "dimension " + std::to_string(D.n) + (D.euler_only ? ", from Euler characteristics" : "");
  put_verdict(out, D, spec);
  return out;
}

RowResult hyperplane_row(const Catalog& cat, const std::string& label) {
  RowResult out;
  const auto spec = linear_section(cat.space(label), 1);
  put_verdict(out, section_diamond(spec), spec);
  return out;
}

RowResult dual_claim_row(const Catalog& cat, const std::string& label) {
  RowResult out;
  const auto rep = dual_correspondence(cat.space(label));
  out.values["moduli_X"] = num(rep.x_moduli.value);
  out.values["moduli_X*"] = num(rep.x_star_moduli.value);
  out.values["J_dim_X"] = num(rep.jacobian_dim_x);
  out.values["J_dim_X*"] = num(rep.jacobian_dim_x_star);
  out.row_note = rep.x + " <-> " + rep.x_star;
  return out;
}

// Columns "Omega^p(-k)" and "Omega^p(-k) support".
RowResult forms_row(const Catalog& cat, const std::string& label, const std::vector<std::string>& columns) {
  RowResult out;
  const HomogSpace& space = cat.space(label);
  const int dim = space.dimension();
  for (const auto& col : columns) {
    int p = 0, k = 0;
    if (std::sscanf(col.c_str(), "Omega^%d(-%d)", &p, &k) != 2)
      throw std::invalid_argument("cannot parse column '" + col + "'");
    const auto dims = forms_cohomology(space, p, -k);
    std::ostringstream degrees;
    bool top_only = true;
    for (const auto& [q, d] : dims) {
      degrees << (degrees.tellp() > 0 ? "," : "") << q;
      top_only = top_only && q == dim;
    }
    if (col.ends_with(" support"))
      out.values[col] = top_only ? "within {" + std::to_string(dim) + "}" : "{" + degrees.str() + "}";
    else
      out.values[col] = dims.empty() ? std::string("acyclic") : "degrees {" + degrees.str() + "}";
  }
  return out;
}

struct Job {
  std::string table;
  std::string row;
  std::vector<std::pair<std::string, std::optional<json>>> columns;  // column, fixture
  std::function<RowResult()> run;
};

std::map<std::string, RowJob, std::less<>> row_jobs() {
  using namespace std::placeholders;
  return {
      {"weighted31", weighted_row},
      {"linear33", [](const Catalog& c, const std::string& r) { return section_table_row(c, r, 1); }},
      {"mukai34", [](const Catalog& c, const std::string& r) { return section_table_row(c, r, 2); }},
      {"series41", series_row},
      {"moduli43", moduli43_row},
      {"dual44", dual_row},
      {"top-class", top_class_row},
      {"vanishing-scan", vanishing_row},
      {"series-sections", series_section_row},
      {"quadric-sections", quadric_section_row},
      {"lg36-hyperplane", lg36_row},
      {"double-covers", double_cover_row},
      {"hyperplane-sections", hyperplane_row},
      {"dual-pairs", dual_claim_row},
  };
}

std::vector<Job> build_jobs(const Catalog& cat, const std::optional<std::string>& only) {
  std::vector<Job> jobs;
  const auto runners = row_jobs();
  auto runner_for = [&](const std::string& group, const std::string& row,
                        const std::vector<std::string>& cols) -> std::function<RowResult()> {
    if (group == "s10-twisted-forms") return [&cat, row, cols] { return forms_row(cat, row, cols); };
    auto it = runners.find(group);
    if (it == runners.end())
      return [group]() -> RowResult { throw std::logic_error("no computation registered for '" + group + "'"); };
    RowJob f = it->second;
    return [&cat, f, row] { return f(cat, row); };
  };
  for (const auto& id : Catalog::table_ids()) {
    if (only && *only != id) continue;
    for (const auto& r : cat.table(id)) {
      Job job{id, r.label, {}, {}};
      for (const auto& col : cat.table_columns(id)) job.columns.emplace_back(col, r.cells.at(col));
      jobs.push_back(std::move(job));
    }
  }
  std::map<std::pair<std::string, std::string>, size_t> claim_jobs;
  for (const auto& c : cat.claims()) {
    if (only && *only != c.group) continue;
    auto [it, fresh] = claim_jobs.try_emplace({c.group, c.row}, jobs.size());
    if (fresh) jobs.push_back({c.group, c.row, {}, {}});
    jobs[it->second].columns.emplace_back(c.column, c.value);
  }
  for (auto& job : jobs) {
    std::vector<std::string> cols;
    for (const auto& [col, fx] : job.columns) cols.push_back(col);
    job.run = runner_for(job.table, job.row, cols);
  }
  return jobs;
}

std::vector<ReportCell> finish(const Catalog& cat, const Job& job, const RowResult* res, const std::string& error) {
  std::vector<ReportCell> cells;
  for (const auto& [col, fixture] : job.columns) {
    ReportCell cell;
    cell.table = job.table;
    cell.row = job.row;
    cell.column = col;
    cell.fixture = fixture;
    if (res) {
      if (auto it = res->values.find(col); it != res->values.end()) cell.computed = it->second;
      if (auto it = res->notes.find(col); it != res->notes.end()) cell.note = it->second;
      if (cell.note.empty()) cell.note = res->row_note;
      if (cell.computed.is_null() && cell.note.empty()) cell.note = "not computed";
    } else {
      cell.note = error;
    }
    cell.status = classify(cell.fixture, cell.computed);
    cell.documented = cat.is_documented(cell.table, cell.row, cell.column);
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace

std::vector<std::string> verify_groups(const Catalog& catalog) {
  std::vector<std::string> ids = Catalog::table_ids();
  for (const auto& c : catalog.claims())
    if (std::find(ids.begin(), ids.end(), c.group) == ids.end()) ids.push_back(c.group);
  return ids;
}

std::vector<ReportCell> verify_paper(const Catalog& catalog, const VerifyOptions& opts) {
  if (opts.table) {
    const auto ids = verify_groups(catalog);
    if (std::find(ids.begin(), ids.end(), *opts.table) == ids.end())
      throw std::invalid_argument("unknown table '" + *opts.table + "'");
  }
  const auto jobs = build_jobs(catalog, opts.table);
  std::vector<std::vector<ReportCell>> results(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        const RowResult res = jobs[i].run();
        results[i] = finish(catalog, jobs[i], &res, "");
      } catch (const std::exception& e) {
        results[i] = finish(catalog, jobs[i], nullptr, e.what());
      }
    }
  };
  unsigned n = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<size_t>(1, jobs.size())));
  std::vector<std::future<void>> pool;
  for (unsigned i = 0; i < n; ++i) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();

  std::vector<ReportCell> cells;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(cells));
  std::sort(cells.begin(), cells.end(), [](const ReportCell& a, const ReportCell& b) {
    return std::tie(a.table, a.row, a.column) < std::tie(b.table, b.row, b.column);
  });
  return cells;
}

int exit_status(const std::vector<ReportCell>& cells) {
  for (const auto& c : cells)
    if ((c.status == CellStatus::mismatch || c.status == CellStatus::indeterminate) && !c.documented) return 1;
  return 0;
}

json to_json(const ReportCell& c) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["table"] = c.table;
  j["row"] = c.row;
  j["column"] = c.column;
  j["fixture"] = c.fixture ? *c.fixture : json();
  j["computed"] = c.computed;
  j["status"] = status_name(c.status);
  j["documented"] = c.documented;
  j["note"] = c.note;
  return j;
}

ReportCell cell_from_json(const json& j) {
  if (j.value("schema_version", 0) != kReportSchemaVersion)
    throw std::invalid_argument("unsupported report schema version");
  ReportCell c;
  c.table = j.at("table");
  c.row = j.at("row");
  c.column = j.at("column");
  if (!j.at("fixture").is_null()) c.fixture = j.at("fixture");
  c.computed = j.at("computed");
  c.status = parse_status(j.at("status"));
  c.documented = j.at("documented");
  c.note = j.at("note");
  return c;
}

namespace {

std::string text_of(const json& v) {
  if (v.is_null()) return "-";
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string render_text(const std::vector<ReportCell>& cells) {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"table", "row", "column", "fixture", "computed", "status"});
  for (const auto& c : cells) {
    std::string st = status_name(c.status);
    if (c.documented && c.status != CellStatus::match) st += " (documented)";
    rows.push_back({c.table, c.row, c.column, c.fixture ? text_of(*c.fixture) : "-", text_of(c.computed), st});
  }
  std::array<size_t, 6> width{};
  for (const auto& r : rows)
    for (size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  std::ostringstream os;
  for (size_t k = 0; k < rows.size(); ++k) {
    std::string line;
    for (size_t i = 0; i < rows[k].size(); ++i) {
      line += rows[k][i];
      if (i + 1 < rows[k].size()) line += std::string(width[i] - rows[k][i].size() + 2, ' ');
    }
    if (k > 0 && !cells[k - 1].note.empty()) line += "  # " + cells[k - 1].note;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  std::map<CellStatus, int> count;
  int documented = 0;
  for (const auto& c : cells) {
    ++count[c.status];
    if (c.documented && c.status != CellStatus::match) ++documented;
  }
  os << "cells: " << cells.size() << "  match: " << count[CellStatus::match]
     << "  mismatch: " << count[CellStatus::mismatch] << "  fixture-absent: " << count[CellStatus::fixture_absent]
     << "  indeterminate: " << count[CellStatus::indeterminate] << "  documented: " << documented << '\n';
  return os.str();
}

std::string render_csv(const std::vector<ReportCell>& cells) {
  std::ostringstream os;
  os << "table,row,column,fixture,computed,status,documented,note\n";
  for (const auto& c : cells)
    os << csv_field(c.table) << ',' << csv_field(c.row) << ',' << csv_field(c.column) << ','
       << csv_field(c.fixture ? text_of(*c.fixture) : "") << ',' << csv_field(c.computed.is_null() ? "" : text_of(c.computed))
       << ',' << status_name(c.status) << ',' << (c.documented ? "yes" : "no") << ',' << csv_field(c.note) << '\n';
  return os.str();
}

std::string render_jsonl(const std::vector<ReportCell>& cells) {
  std::string out;
  for (const auto& c : cells) out += to_json(c).dump() + '\n';
  return out;
}

std::string aut_name(const HomogSpace& space) {
  std::string out;
  for (const auto& f : space.factors) {
    if (!out.empty()) out += 'x';
    switch (f.series) {
      case Series::A: out += "PSL" + std::to_string(f.rank + 1); break;
      case Series::B: out += "Spin" + std::to_string(2 * f.rank + 1); break;
      case Series::C: out += "Sp" + std::to_string(2 * f.rank); break;
      case Series::D: out += "Spin" + std::to_string(2 * f.rank); break;
      case Series::E: out += "E" + std::to_string(f.rank); break;
      case Series::G: out += "G2"; break;
    }
  }
  return out;
}

namespace {

std::string e6_token(int v) {
  const std::string sign = v < 0 ? "-" : "";
  const int a = std::abs(v);
  if (a == 10) return sign + "A";
  if (a == 11) return sign + "B";
  return std::to_string(v);
}

}  // namespace

std::pair<std::string, std::string> e6_diagram(const Weight& w) {
  if (w.rank() != 6) throw std::invalid_argument("e6_diagram needs six coordinates");
  std::string top;
  size_t anchor = 0;
  for (int node : {1, 3, 4, 5, 6}) {
    top += e6_token(w[node]);
    if (node == 4) anchor = top.size() - 1;
  }
  const std::string below = e6_token(w[2]);
  std::string bottom(anchor + 1 >= below.size() ? anchor + 1 - below.size() : 0, ' ');
  bottom += below;
  return {top, bottom};
}

std::string render_walk(const RootSystem& rs, const Weight& start, const std::vector<WalkStep>& steps) {
  const bool e6 = rs.series() == Series::E && rs.rank() == 6;
  constexpr size_t kLabel = 8;
  std::ostringstream os;
  auto emit = [&](const std::string& label, const Weight& w) {
    std::string lab = label;
    lab.resize(kLabel, ' ');
    if (e6) {
      auto [top, bottom] = e6_diagram(w);
      os << lab << top << '\n' << std::string(kLabel, ' ') << bottom << '\n';
    } else {
      os << lab << to_string(w) << '\n';
    }
  };
  emit("", start);
  for (const auto& s : steps) emit("s" + std::to_string(s.node) + " ->", s.weight);
  return os.str();
}

}  // namespace bwb
