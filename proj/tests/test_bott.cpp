#include <algorithm>

#include "bwb/bott.hpp"
#include "doctest.h"

using namespace bwb;

namespace {

const HomogSpace& sp(const char* name) { return Catalog::instance().space(name); }

// single entry (degree, dim) of a table, or (-1, 0) when acyclic
std::pair<int, BigInt> only(const CohomologyTable& t) {
  if (t.acyclic()) return {-1, 0};
  REQUIRE(t.entries.size() == 1);
  return {t.entries.begin()->first, t.entries.begin()->second.dim};
}

std::pair<int, BigInt> only(const CohomologyDims& d) {
  if (d.empty()) return {-1, 0};
  REQUIRE(d.size() == 1);
  return {d.begin()->first, d.begin()->second};
}

}  // namespace

TEST_CASE("structure sheaf") {
  for (const char* name : {"OP2", "S10", "G(2,10)", "(P1)^3xP3", "G2ad"}) {
    const auto& s = sp(name);
    std::vector<Weight> hw;
    for (const auto& f : s.factors) hw.push_back(f.root_system()->zero());
    CHECK(only(bwb::bwb(make_bundle(s, hw))) == std::pair<int, BigInt>{0, 1});
  }
}

TEST_CASE("the four top-degree classes") {
  const auto& op2 = sp("OP2");
  auto b = make_bundle(op2, {Weight{-3, 0, 0, 1, 0, 0}}, {-9});
  CHECK(b.hw[0] == Weight{-12, 0, 0, 1, 0, 0});
  auto t = bwb::bwb(b);
  CHECK(only(t) == std::pair<int, BigInt>{14, 1});
  CHECK(t.entries.at(14).highest[0] == RootSystem::get(Series::E, 6)->zero());

  CHECK(only(forms_cohomology(sp("OP2"), 2, -9)) == std::pair<int, BigInt>{14, 1});
  CHECK(only(forms_cohomology(sp("S12"), 3, -6)) == std::pair<int, BigInt>{12, 1});
  CHECK(only(forms_cohomology(sp("G(2,10)"), 4, -5)) == std::pair<int, BigInt>{12, 1});
  CHECK(only(forms_cohomology(sp("S14"), 7, -4)) == std::pair<int, BigInt>{14, 1});
}

TEST_CASE("Grassmannian summands of the fourth forms on G(2,10)") {
  const auto& g = sp("G(2,10)");
  auto forms = kostant_forms(g, 4);
  REQUIRE(forms.size() == 3);
  for (const char* label : {"Q*:1111;E:4", "Q*:211;E:31", "Q*:22;E:22"}) {
    auto b = grassmann_bundle(g, parse_grassmann_label(label), 0);
    CHECK(std::find(forms.begin(), forms.end(), b) != forms.end());
  }
  CHECK(only(fastpath_grassmann(g, parse_grassmann_label("Q*:1111;E:4"), -5)) == std::pair<int, BigInt>{12, 1});
  CHECK(fastpath_grassmann(g, parse_grassmann_label("Q*:211;E:31"), -5).acyclic());
  CHECK(fastpath_grassmann(g, parse_grassmann_label("Q*:22;E:22"), -5).acyclic());
  auto eps = grassmann_epsilon(g, parse_grassmann_label("Q*:211;E:31"), -5);
  std::vector<int> shifted(eps.size());
  for (size_t i = 0; i < eps.size(); ++i) shifted[i] = eps[i] + static_cast<int>(eps.size() - 1 - i);
  CHECK(shifted == std::vector<int>{4, 3, 2, 1, 0, -2, -3, -5, 4, 1});
}

TEST_CASE("spinor sequences on S12 and S14") {
  const auto& s12 = sp("S12");
  CHECK(only(bwb::bwb(spinor_bundle_from_shifted(s12, {2, 1, 0, -3, -4, -5}))) == std::pair<int, BigInt>{12, 1});
  CHECK(bwb::bwb(spinor_bundle_from_shifted(s12, {2, 0, -1, -2, -3, -7})).acyclic());
  CHECK(only(fastpath(spinor_bundle_from_shifted(s12, {2, 1, 0, -3, -4, -5}))) == std::pair<int, BigInt>{12, 1});

  const auto& s14 = sp("S14");
  CHECK(kostant_forms(s14, 7).size() == 4);
  CHECK(only(bwb::bwb(spinor_bundle_from_shifted(s14, {4, 3, 0, -1, -2, -5, -6}))) == std::pair<int, BigInt>{14, 1});
  CHECK(kostant_forms(s12, 3).size() == 2);
}

TEST_CASE("Kostant forms") {
  auto op2 = kostant_forms(sp("OP2"), 1);
  REQUIRE(op2.size() == 1);
  CHECK(op2[0].hw[0] == Weight{-2, 0, 1, 0, 0, 0});
  auto op2_2 = kostant_forms(sp("OP2"), 2);
  REQUIRE(op2_2.size() == 1);
  CHECK(op2_2[0].hw[0] == Weight{-3, 0, 0, 1, 0, 0});
  for (const char* name : {"S10", "LG(3,6)", "(P1)^4"}) {
    auto zero = kostant_forms(sp(name), 0);
    REQUIRE(zero.size() == 1);
    CHECK(only(bwb::bwb(zero[0])) == std::pair<int, BigInt>{0, 1});
  }
  CHECK_THROWS(kostant_forms(sp("G2ad"), 1));
  CHECK_THROWS(kostant_forms(sp("IG(2,6)"), 1));
}

TEST_CASE("acyclic twisted forms on S10") {
  for (auto [p, kmax] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {3, 2}, {4, 2}})
    for (int k = 1; k <= kmax; ++k) {
      CAPTURE(p);
      CAPTURE(k);
      CHECK(forms_cohomology(sp("S10"), p, -k).empty());
    }
  CHECK(only(forms_cohomology(sp("S10"), 0, 0)) == std::pair<int, BigInt>{0, 1});
}

TEST_CASE("Euler characteristics") {
  CHECK(euler_char(sp("S10"), 1, 0) == -1);
  for (const char* name : {"S10", "G2ad", "IG(2,6)", "OP2", "(P1)^3xP3"}) CHECK(euler_char(sp(name), 0, 0) == 1);
  for (const char* name : {"S10", "G(2,6)", "LG(3,6)", "P3xP3"})
    for (int p = 0; p <= 4; ++p)
      for (int k = -4; k <= 2; ++k) CHECK(euler_char(sp(name), p, k) == alternating_sum(forms_cohomology(sp(name), p, k)));
  // G2 adjoint variety: chi(T) = dim G2 and O(1) has the 14 sections.
  CHECK(euler_char(sp("G2ad"), 0, 1) == 14);
}

TEST_CASE("Levi dominance is enforced") {
  CHECK_THROWS_AS(make_bundle(sp("OP2"), {Weight{0, -1, 0, 0, 0, 0}}), std::invalid_argument);
  CHECK_NOTHROW(make_bundle(sp("OP2"), {Weight{-5, 0, 0, 0, 0, 0}}));
  CHECK_THROWS(fastpath(make_bundle(sp("OP2"), {Weight{0, 0, 0, 0, 0, 0}})));
}

TEST_CASE("products add degrees and multiply dimensions") {
  const auto& pp = sp("P3xP3");
  // O(-4, 0): H^3(P3, K) (x) H^0(P3, O)
  auto t = bwb::bwb(make_bundle(pp, {Weight{0, 0, 0}, Weight{0, 0, 0}}, {-4, 1}));
  CHECK(only(t) == std::pair<int, BigInt>{3, 4});
  CHECK(bwb::bwb(make_bundle(pp, {Weight{0, 0, 0}, Weight{0, 0, 0}}, {-2, 1})).acyclic());
}

TEST_CASE("label parsing") {
  auto l = parse_grassmann_label("Q*:1111;E:4");
  CHECK(l.qdual == std::vector<int>{1, 1, 1, 1});
  CHECK(l.e == std::vector<int>{4});
  CHECK(parse_grassmann_label("Q*:12,3;E:").qdual == std::vector<int>{12, 3});
  CHECK_THROWS(parse_grassmann_label("nonsense"));
}

TEST_CASE("doubled epsilon conversions round-trip") {
  for (const auto& w : {Weight{0, 0, 0, 0, 1}, Weight{1, 0, 2, 0, -3}, Weight{0, 0, 0, 1, 0}})
    CHECK(d_weight_from_epsilon2(d_epsilon2_from_weight(w)) == w);
}
