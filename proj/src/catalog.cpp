#include "bwb/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace bwb {

int Factor::dimension() const {
  const int marked[] = {node};
  return root_system()->nilradical_size(marked);
}

int Factor::index() const {
  // -K = E_{sum of the nilradical roots}; that sum is orthogonal to the Levi
  // roots, so only its coordinate at the marked node survives.
  auto rs = root_system();
  Weight sum = rs->zero();
  for (const auto& beta : rs->positive_roots())
    if (beta[node - 1] != 0) sum += rs->root_weight(beta);
  return sum[node];
}

bool Factor::is_cominuscule() const { return root_system()->is_cominuscule(node); }

int HomogSpace::dimension() const {
  int d = 0;
  for (const auto& f : factors) d += f.dimension();
  return d;
}

bool HomogSpace::is_cominuscule() const {
  for (const auto& f : factors)
    if (!f.is_cominuscule()) return false;
  return true;
}

SpaceFacts space_facts(const HomogSpace& space) {
  SpaceFacts f;
  f.dim = space.dimension();
  int g = 0;
  for (const auto& fac : space.factors) {
    f.index_vector.push_back(fac.index());
    g = std::gcd(g, f.index_vector.back());
    f.aut_dim += fac.root_system()->group_dimension();
  }
  f.index = g;
  for (int r : f.index_vector) f.primitive_class.push_back(r / g);
  f.coindex = f.dim - f.index;
  f.ambient_dim = sections(space, f.primitive_class) - 1;
  f.dual_degree = space.dual_degree;
  return f;
}

Twist scaled_class(const HomogSpace& space, int k) {
  Twist t = space_facts(space).primitive_class;
  for (int& x : t) x *= k;
  return t;
}

BigInt sections(const HomogSpace& space, const Twist& twist) {
  if (twist.size() != space.factors.size())
    throw std::invalid_argument("twist length does not match the Picard rank of " + space.name);
  BigInt total = 1;
  for (size_t i = 0; i < twist.size(); ++i) {
    if (twist[i] < 0) return 0;
    const auto& fac = space.factors[i];
    auto rs = fac.root_system();
    total *= rs->weyl_dim(twist[i] * rs->fundamental(fac.node));
  }
  return total;
}

namespace {

const std::vector<std::string> kTableIds = {"weighted31", "linear33", "mukai34",
                                            "series41",   "moduli43", "dual44"};

std::string cell_text(const nlohmann::ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

const std::vector<std::string>& Catalog::table_ids() { return kTableIds; }

Catalog Catalog::from_json(const nlohmann::ordered_json& doc) {
  Catalog c;
  int version = doc.value("schema_version", 0);
  if (version != kSchemaVersion)
    throw std::runtime_error("catalog schema version " + std::to_string(version) +
                             " is not supported (expected " + std::to_string(kSchemaVersion) + ")");
  for (const auto& js : doc.at("spaces")) {
    HomogSpace s;
    s.name = js.at("name").get<std::string>();
    for (const auto& jf : js.at("factors")) {
      std::string series = jf.at("series").get<std::string>();
      if (series.size() != 1) throw std::runtime_error("bad series in catalog: " + series);
      Factor f{parse_series(series[0]), jf.at("rank").get<int>(), jf.at("node").get<int>()};
      if (f.node < 1 || f.node > f.rank)
        throw std::runtime_error("catalog space " + s.name + ": marked node out of range");
      f.root_system();  // validates the (series, rank) pair
      s.factors.push_back(f);
    }
    if (s.factors.empty()) throw std::runtime_error("catalog space " + s.name + " has no factors");
    if (js.contains("fixtures")) s.fixtures = js.at("fixtures");
    if (js.contains("dual_degree")) s.dual_degree = js.at("dual_degree").get<int>();
    s.dual_variety = js.value("dual_variety", "");
    c.spaces_.push_back(std::move(s));
  }
  for (const auto& [id, jt] : doc.at("tables").items()) {
    std::vector<std::string> cols = jt.at("columns").get<std::vector<std::string>>();
    std::string label_col = jt.at("label_column").get<std::string>();
    std::vector<TableRow> rows;
    for (const auto& jr : jt.at("rows")) {
      TableRow r;
      r.table = id;
      r.label = cell_text(jr.at(label_col));
      for (const auto& col : cols) r.cells[col] = jr.at(col);
      rows.push_back(std::move(r));
    }
    c.columns_[id] = std::move(cols);
    c.tables_[id] = std::move(rows);
  }
  if (doc.contains("discrepancies"))
    for (const auto& jd : doc.at("discrepancies"))
      c.discrepancies_.push_back({jd.at("table"), jd.at("row"), jd.at("column"), jd.value("note", "")});
  if (doc.contains("claims"))
    for (const auto& jc : doc.at("claims"))
      c.claims_.push_back({jc.at("group"), jc.at("row"), jc.at("column"), jc.at("value")});
  return c;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file " + path);
  return from_json(nlohmann::ordered_json::parse(in));
}

std::string Catalog::default_path() {
  if (const char* env = std::getenv("BWB_CATALOG"); env && *env) return env;
  return BWB_DEFAULT_CATALOG;
}

const Catalog& Catalog::instance() {
  static const Catalog cat = load(default_path());
  return cat;
}

const HomogSpace& Catalog::space(std::string_view name) const {
  for (const auto& s : spaces_)
    if (s.name == name) return s;
  throw std::invalid_argument("unknown space '" + std::string(name) + "'");
}

bool Catalog::has_space(std::string_view name) const {
  for (const auto& s : spaces_)
    if (s.name == name) return true;
  return false;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& s : spaces_) out.push_back(s.name);
  return out;
}

std::vector<TableRow> Catalog::table(std::string_view id) const {
  auto it = tables_.find(id);
  if (it == tables_.end()) throw std::invalid_argument("unknown table id '" + std::string(id) + "'");
  return it->second;
}

const std::vector<std::string>& Catalog::table_columns(std::string_view id) const {
  auto it = columns_.find(id);
  if (it == columns_.end()) throw std::invalid_argument("unknown table id '" + std::string(id) + "'");
  return it->second;
}

bool Catalog::is_documented(std::string_view table, std::string_view row, std::string_view column) const {
  for (const auto& d : discrepancies_)
    if (d.table == table && d.row == row && d.column == column) return true;
  return false;
}

}  // namespace bwb
