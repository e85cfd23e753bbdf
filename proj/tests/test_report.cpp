#include <sstream>

#include "bwb/report.hpp"
#include "doctest.h"

using namespace bwb;
using nlohmann::ordered_json;

namespace {
const Catalog& cat() { return Catalog::instance(); }
}  // namespace

TEST_CASE("cell classification") {
  CHECK(classify(ordered_json(84), ordered_json(84)) == CellStatus::match);
  CHECK(classify(ordered_json(45), ordered_json(44)) == CellStatus::mismatch);
  CHECK(classify(std::nullopt, ordered_json(44)) == CellStatus::fixture_absent);
  CHECK(classify(ordered_json(44), ordered_json()) == CellStatus::indeterminate);
  CHECK(classify(ordered_json("84"), ordered_json(84)) == CellStatus::mismatch);
  for (auto s : {CellStatus::match, CellStatus::mismatch, CellStatus::fixture_absent, CellStatus::indeterminate})
    CHECK(parse_status(status_name(s)) == s);
  CHECK(status_name(CellStatus::fixture_absent) == "fixture-absent");
}

TEST_CASE("E6 diagrams") {
  auto [top, bottom] = e6_diagram(Weight{-11, 1, 1, 2, 1, 1});
  CHECK(top == "-B1211");
  CHECK(bottom == "   1");
  auto [t2, b2] = e6_diagram(Weight{1, -7, 2, 8, -7, 1});
  CHECK(t2 == "128-71");
  CHECK(b2 == " -7");
  auto [t3, b3] = e6_diagram(Weight{1, 1, 1, 1, 1, 1});
  CHECK(t3 == "11111");
  CHECK(b3 == "  1");
  CHECK_THROWS(e6_diagram(Weight{1, 2}));
}

TEST_CASE("automorphism group names") {
  CHECK(aut_name(cat().space("G(2,10)")) == "PSL10");
  CHECK(aut_name(cat().space("S12")) == "Spin12");
  CHECK(aut_name(cat().space("OP2")) == "E6");
  CHECK(aut_name(cat().space("S14")) == "Spin14");
}

TEST_CASE("series table verifies cleanly") {
  auto cells = verify_paper(cat(), {.table = "series41", .workers = 2});
  CHECK(cells.size() == 20);
  for (const auto& c : cells) CHECK(c.status == CellStatus::match);
  CHECK(exit_status(cells) == 0);
}

TEST_CASE("full verification") {
  auto cells = verify_paper(cat());
  CHECK(cells.size() >= 60);
  CHECK(exit_status(cells) == 0);
  for (size_t i = 1; i < cells.size(); ++i) {
    const auto& a = cells[i - 1];
    const auto& b = cells[i];
    CHECK(std::tie(a.table, a.row, a.column) < std::tie(b.table, b.row, b.column));
  }
  bool g311 = false;
  for (const auto& c : cells) {
    if (c.status == CellStatus::mismatch) CHECK(c.documented);
    CHECK(c.status != CellStatus::indeterminate);
    if (c.table == "linear33" && c.row == "G(3,11)" && c.column == "moduli") {
      g311 = true;
      CHECK(c.computed == 44);
      CHECK(*c.fixture == 45);
    }
  }
  CHECK(g311);
  // every group is represented
  for (const auto& g : verify_groups(cat())) {
    bool seen = false;
    for (const auto& c : cells) seen = seen || c.table == g;
    CAPTURE(g);
    CHECK(seen);
  }
}

TEST_CASE("an undocumented mismatch fails the run") {
  ReportCell c{"t", "r", "c", ordered_json(1), ordered_json(2), CellStatus::mismatch, false, ""};
  CHECK(exit_status({c}) != 0);
  c.documented = true;
  CHECK(exit_status({c}) == 0);
  c.status = CellStatus::indeterminate;
  c.documented = false;
  CHECK(exit_status({c}) != 0);
}

TEST_CASE("JSON lines round-trip") {
  auto cells = verify_paper(cat(), {.table = "dual44"});
  REQUIRE_FALSE(cells.empty());
  std::istringstream in(render_jsonl(cells));
  std::string line;
  size_t i = 0;
  while (std::getline(in, line)) {
    auto j = ordered_json::parse(line);
    CHECK(j.at("schema_version") == kReportSchemaVersion);
    REQUIRE(i < cells.size());
    CHECK(cell_from_json(j) == cells[i]);
    CHECK(to_json(cell_from_json(j)) == j);
    ++i;
  }
  CHECK(i == cells.size());
}

TEST_CASE("renderings are deterministic") {
  auto a = verify_paper(cat(), {.workers = 1});
  auto b = verify_paper(cat(), {.workers = 8});
  CHECK(a == b);
  CHECK(render_text(a) == render_text(b));
  CHECK(render_csv(a) == render_csv(b));
  CHECK(render_csv(a).rfind("table,row,column,fixture,computed,status,documented,note\n", 0) == 0);
}
