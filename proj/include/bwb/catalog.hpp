// Homogeneous spaces G/P (products of marked Dynkin diagrams) and the
// reference tables they are checked against.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bwb/rootsys.hpp"
#include "json.hpp"

namespace bwb {

struct Factor {
  Series series;
  int rank;
  int node;

  RootSystemPtr root_system() const { return RootSystem::get(series, rank); }
  int dimension() const;
  /// Index of the factor: -K restricted to it is O(index) in terms of the
  /// generator E_{omega_node} of its Picard group.
  int index() const;
  bool is_cominuscule() const;
  bool operator==(const Factor&) const = default;
};

struct HomogSpace {
  std::string name;
  std::vector<Factor> factors;
  nlohmann::ordered_json fixtures = nlohmann::ordered_json::object();
  std::optional<int> dual_degree;
  std::string dual_variety;

  int picard_rank() const { return static_cast<int>(factors.size()); }
  int dimension() const;
  bool is_cominuscule() const;
};

/// Integer vector with one entry per Picard factor (a line bundle class
/// O(a_1, ..., a_k)).
using Twist = std::vector<int>;

struct SpaceFacts {
  int dim = 0;
  std::vector<int> index_vector;   // per factor
  int index = 0;                   // -K = index * L
  Twist primitive_class;           // L, per factor
  int coindex = 0;
  BigInt ambient_dim;              // N, with P^N = P(H^0(L)^*)
  int aut_dim = 0;                 // delta
  std::optional<int> dual_degree;
};

SpaceFacts space_facts(const HomogSpace& space);

/// k * L as a per-factor twist.
Twist scaled_class(const HomogSpace& space, int k);

/// h^0(Sigma, O(twist)) for a twist with nonnegative entries.
BigInt sections(const HomogSpace& space, const Twist& twist);

struct TableRow {
  std::string table;
  std::string label;
  nlohmann::ordered_json cells;  // column -> value
};

struct Discrepancy {
  std::string table;
  std::string row;
  std::string column;
  std::string note;
};

/// A value asserted in prose rather than in a table.
struct Claim {
  std::string group;
  std::string row;
  std::string column;
  nlohmann::ordered_json value;
};

class Catalog {
public:
  static constexpr int kSchemaVersion = 1;

  static Catalog from_json(const nlohmann::ordered_json& doc);
  static Catalog load(const std::string& path);
  /// Catalog named by $BWB_CATALOG, or the bundled data/catalog.json.
  static const Catalog& instance();
  static std::string default_path();

  const HomogSpace& space(std::string_view name) const;
  bool has_space(std::string_view name) const;
  std::vector<std::string> names() const;

  static const std::vector<std::string>& table_ids();
  std::vector<TableRow> table(std::string_view id) const;
  const std::vector<std::string>& table_columns(std::string_view id) const;
  const std::vector<Discrepancy>& discrepancies() const { return discrepancies_; }
  bool is_documented(std::string_view table, std::string_view row, std::string_view column) const;
  const std::vector<Claim>& claims() const { return claims_; }

private:
  std::vector<HomogSpace> spaces_;
  std::map<std::string, std::vector<std::string>, std::less<>> columns_;
  std::map<std::string, std::vector<TableRow>, std::less<>> tables_;
  std::vector<Discrepancy> discrepancies_;
  std::vector<Claim> claims_;
};

}  // namespace bwb
