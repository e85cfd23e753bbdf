// Cell-by-cell comparison of computed values against the catalog, and the
// text renderings shared by the command-line tool and the tests.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bwb/catalog.hpp"
#include "bwb/rootsys.hpp"
#include "json.hpp"

namespace bwb {

/// Version of the JSON records emitted by the report and the CLI.
inline constexpr int kReportSchemaVersion = 1;

enum class CellStatus { match, mismatch, fixture_absent, indeterminate };
std::string status_name(CellStatus s);
CellStatus parse_status(const std::string& s);

struct ReportCell {
  std::string table;   // table id or claim group
  std::string row;
  std::string column;
  std::optional<nlohmann::ordered_json> fixture;
  nlohmann::ordered_json computed;  // null when the computation failed
  CellStatus status = CellStatus::indeterminate;
  bool documented = false;  // listed among the catalog discrepancies
  std::string note;

  bool operator==(const ReportCell&) const = default;
};

/// match iff the fixture is present and equal to the computed value.
CellStatus classify(const std::optional<nlohmann::ordered_json>& fixture, const nlohmann::ordered_json& computed);

struct VerifyOptions {
  std::optional<std::string> table;  // restrict to one table id or claim group
  unsigned workers = 0;              // 0: hardware concurrency
};

/// Every table cell and every claim, computed independently and compared.
/// Output is sorted by (table, row, column) whatever the completion order.
std::vector<ReportCell> verify_paper(const Catalog& catalog, const VerifyOptions& opts = {});

/// Table ids and claim groups known to verify_paper.
std::vector<std::string> verify_groups(const Catalog& catalog);

/// 0 iff every mismatch and indeterminate cell is documented.
int exit_status(const std::vector<ReportCell>& cells);

nlohmann::ordered_json to_json(const ReportCell& cell);
ReportCell cell_from_json(const nlohmann::ordered_json& j);

std::string render_text(const std::vector<ReportCell>& cells);
std::string render_csv(const std::vector<ReportCell>& cells);
/// One JSON object per line.
std::string render_jsonl(const std::vector<ReportCell>& cells);

/// "PSL10", "Spin12", "E6", "Sp6", "G2"; products joined with 'x'.
std::string aut_name(const HomogSpace& space);

/// E6 weight in the two-row diagram style: nodes 1,3,4,5,6 on top (A = 10,
/// B = 11), node 2 below the last character of node 4.
std::pair<std::string, std::string> e6_diagram(const Weight& w);

/// Full reflection walk from `start`, one labelled step per block. E6 uses
/// the two-row diagrams; other types print coordinate tuples.
std::string render_walk(const RootSystem& rs, const Weight& start, const std::vector<WalkStep>& steps);

}  // namespace bwb
