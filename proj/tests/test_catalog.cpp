#include <algorithm>

#include "bwb/catalog.hpp"
#include "doctest.h"

using namespace bwb;

namespace {
const Catalog& cat() { return Catalog::instance(); }
}  // namespace

TEST_CASE("space facts of the series spaces") {
  auto op2 = space_facts(cat().space("OP2"));
  CHECK(op2.dim == 16);
  CHECK(op2.index == 12);
  CHECK(op2.coindex == 4);
  CHECK(op2.dual_degree == 3);
  CHECK(op2.ambient_dim == 26);
  CHECK(op2.aut_dim == 78);

  auto g = space_facts(cat().space("G(2,10)"));
  CHECK(g.dim == 16);
  CHECK(g.index == 10);
  CHECK(g.ambient_dim == 44);
  CHECK(g.aut_dim == 99);

  auto s12 = space_facts(cat().space("S12"));
  CHECK(s12.dim == 15);
  CHECK(s12.index == 10);
  CHECK(s12.ambient_dim == 31);
  CHECK(s12.aut_dim == 66);

  auto s14 = space_facts(cat().space("S14"));
  CHECK(s14.dim == 21);
  CHECK(s14.index == 12);
  CHECK(s14.ambient_dim == 63);
  CHECK(s14.aut_dim == 91);
}

TEST_CASE("space facts of Mukai and linear-section spaces") {
  auto s10 = space_facts(cat().space("S10"));
  CHECK(s10.dim == 10);
  CHECK(s10.index == 8);

  auto p16 = space_facts(cat().space("(P1)^6"));
  CHECK(p16.dim == 6);
  CHECK(p16.index == 2);
  CHECK(p16.primitive_class == Twist{1, 1, 1, 1, 1, 1});
  CHECK(p16.ambient_dim == 63);
  CHECK(p16.aut_dim == 18);

  // -K = O(2,2,2,4): the primitive class carries 2 on the P3 factor.
  auto mixed = space_facts(cat().space("(P1)^3xP3"));
  CHECK(mixed.index_vector == std::vector<int>{2, 2, 2, 4});
  CHECK(mixed.index == 2);
  CHECK(mixed.primitive_class == Twist{1, 1, 1, 2});
  CHECK(mixed.ambient_dim == 79);

  auto ig = space_facts(cat().space("IG(2,6)"));
  CHECK(ig.dim == 7);
  CHECK(ig.index == 5);
  auto g2 = space_facts(cat().space("G2ad"));
  CHECK(g2.dim == 5);
  CHECK(g2.index == 3);
  CHECK(g2.ambient_dim == 13);
}

TEST_CASE("dimension and cominuscule flags") {
  for (const auto& name : cat().names()) {
    const auto& sp = cat().space(name);
    int dim = 0;
    for (const auto& f : sp.factors) dim += f.root_system()->nilradical_size(std::vector<int>{f.node});
    CHECK(sp.dimension() == dim);
    const bool comin = std::all_of(sp.factors.begin(), sp.factors.end(),
                                   [](const Factor& f) { return f.root_system()->is_cominuscule(f.node); });
    CHECK(sp.is_cominuscule() == comin);
  }
  CHECK_FALSE(cat().space("G2ad").is_cominuscule());
  CHECK_FALSE(cat().space("IG(2,6)").is_cominuscule());
  CHECK(cat().space("LG(3,6)").is_cominuscule());
}

TEST_CASE("ambient dimension is the embedding module") {
  for (const auto& name : cat().names()) {
    const auto& sp = cat().space(name);
    const auto f = space_facts(sp);
    CHECK(f.ambient_dim + 1 == sections(sp, f.primitive_class));
  }
}

TEST_CASE("series relations") {
  for (const char* name : {"OP2", "S12", "G(2,10)", "S14"}) {
    const auto f = space_facts(cat().space(name));
    REQUIRE(f.dual_degree.has_value());
    CHECK(*f.dual_degree == f.coindex - 1);
  }
}

TEST_CASE("tables") {
  CHECK(Catalog::table_ids().size() == 6);
  auto series = cat().table("series41");
  REQUIRE(series.size() == 4);
  std::vector<int> deg;
  for (const auto& r : series) deg.push_back(r.cells.at("deg").get<int>());
  CHECK(deg == std::vector<int>{3, 4, 5, 8});

  std::vector<int> m;
  for (const auto& r : cat().table("moduli43")) m.push_back(r.cells.at("m").get<int>());
  CHECK(m == std::vector<int>{84, 90, 101, 149});

  std::vector<int> w;
  for (const auto& r : cat().table("weighted31")) w.push_back(r.cells.at("moduli").get<int>());
  CHECK(w == std::vector<int>{84, 83, 90});

  CHECK_THROWS(cat().table("nope"));
  CHECK_THROWS(cat().space("P99"));
}

TEST_CASE("documented discrepancies") {
  CHECK(cat().is_documented("linear33", "G(3,11)", "moduli"));
  CHECK(cat().is_documented("weighted31", "cubic section of Q^6", "w"));
  CHECK_FALSE(cat().is_documented("linear33", "(P1)^6", "moduli"));
}

TEST_CASE("schema validation") {
  nlohmann::ordered_json doc = {{"schema_version", 99}, {"spaces", nlohmann::ordered_json::array()}};
  CHECK_THROWS(Catalog::from_json(doc));
  nlohmann::ordered_json bad = {
      {"schema_version", 1},
      {"spaces", {{{"name", "X"}, {"factors", {{{"series", "Q"}, {"rank", 2}, {"node", 1}}}}}}}};
  CHECK_THROWS(Catalog::from_json(bad));
}
