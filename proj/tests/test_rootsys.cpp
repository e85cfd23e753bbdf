#include <algorithm>
#include <random>
#include <set>

#include "bwb/rootsys.hpp"
#include "doctest.h"

using namespace bwb;

namespace {

void check_dual_bases(const RootSystem& rs) {
  const int r = rs.rank();
  for (int i = 1; i <= r; ++i)
    for (int j = 0; j < r; ++j) {
      std::vector<int> simple(r, 0);
      simple[j] = 1;
      CHECK(rs.pairing(rs.fundamental(i), simple) == (i == j + 1 ? 1 : 0));
    }
}

long orbit_size(const RootSystem& rs, const Weight& start) {
  std::set<Weight> seen{start};
  std::vector<Weight> frontier{start};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= rs.rank(); ++i) {
        auto v = rs.simple_reflection(i, w);
        if (seen.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return static_cast<long>(seen.size());
}

}  // namespace

TEST_CASE("cartan matrices") {
  auto a2 = RootSystem::get(Series::A, 2);
  CHECK(a2->cartan() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  auto b2 = RootSystem::get(Series::B, 2);
  auto c2 = RootSystem::get(Series::C, 2);
  // B2: alpha_2 short; C2: alpha_2 long.
  CHECK(b2->cartan()[0][1] * b2->cartan()[1][0] == 2);
  CHECK(b2->cartan() != c2->cartan());
  auto g2 = RootSystem::get(Series::G, 2);
  CHECK(g2->cartan()[0][1] * g2->cartan()[1][0] == 3);
  auto e6 = RootSystem::get(Series::E, 6);
  CHECK(e6->cartan()[1][3] == -1);  // node 2 hangs off node 4
  CHECK(e6->cartan()[0][2] == -1);
}

TEST_CASE("root counts and group dimensions") {
  CHECK(RootSystem::get(Series::A, 9)->group_dimension() == 99);
  CHECK(RootSystem::get(Series::D, 5)->group_dimension() == 45);
  CHECK(RootSystem::get(Series::D, 7)->group_dimension() == 91);
  CHECK(RootSystem::get(Series::E, 6)->group_dimension() == 78);
  CHECK(RootSystem::get(Series::C, 3)->group_dimension() == 21);
  CHECK(RootSystem::get(Series::G, 2)->group_dimension() == 14);
  CHECK(RootSystem::get(Series::B, 3)->positive_roots().size() == 9);
  CHECK(RootSystem::get(Series::E, 7)->positive_roots().size() == 63);
  CHECK(RootSystem::get(Series::E, 6)->highest_root() == std::vector<int>{1, 2, 2, 3, 2, 1});
}

TEST_CASE("fundamental weights pair to delta with simple coroots") {
  for (auto [s, r] : std::vector<std::pair<Series, int>>{
           {Series::A, 4}, {Series::B, 3}, {Series::C, 3}, {Series::D, 5}, {Series::E, 6}, {Series::G, 2}})
    check_dual_bases(*RootSystem::get(s, r));
}

TEST_CASE("simple reflection") {
  auto a1 = RootSystem::get(Series::A, 1);
  CHECK(a1->simple_reflection(1, Weight{1}) == Weight{-1});
  auto e6 = RootSystem::get(Series::E, 6);
  // first step of the printed E6 chain
  CHECK(e6->simple_reflection(1, Weight{-11, 1, 1, 2, 1, 1}) == Weight{11, 1, -10, 2, 1, 1});
  CHECK_THROWS(e6->simple_reflection(7, e6->rho()));
}

TEST_CASE("to_dominant") {
  auto e6 = RootSystem::get(Series::E, 6);
  auto r = e6->to_dominant(Weight{-11, 1, 1, 2, 1, 1});
  CHECK(r.dominant == e6->rho());
  CHECK(r.length == 14);
  CHECK_FALSE(r.singular);

  auto a2 = RootSystem::get(Series::A, 2);
  auto s = a2->to_dominant(Weight{0, 3});
  CHECK(s.singular);
  CHECK(s.length == 0);
  CHECK(s.dominant == Weight{0, 3});

  auto d5 = RootSystem::get(Series::D, 5);
  auto t = d5->to_dominant(d5->rho());
  CHECK(t.length == 0);
  CHECK_FALSE(t.singular);
}

TEST_CASE("dominance walk records every step") {
  auto e6 = RootSystem::get(Series::E, 6);
  const Weight start{-11, 1, 1, 2, 1, 1};
  auto steps = e6->dominance_walk(start);
  REQUIRE(steps.size() == 14);
  Weight w = start;
  for (const auto& st : steps) {
    CHECK(w[st.node] < 0);
    w = e6->simple_reflection(st.node, w);
    CHECK(w == st.weight);
  }
  CHECK(w == e6->rho());

  // the printed chain's pivots
  const std::vector<int> order{1, 3, 4, 2, 5, 6, 4, 5, 3, 1, 4, 2, 3, 4};
  size_t k = 0;
  auto chooser = [&](const Weight&, std::span<const int> neg) {
    int node = order.at(k++);
    REQUIRE(std::find(neg.begin(), neg.end(), node) != neg.end());
    return node;
  };
  auto printed = e6->dominance_walk(start, chooser);
  REQUIRE(printed.size() == 14);
  CHECK(printed[5].weight == Weight{1, 7, 2, -6, 1, 6});
  CHECK(printed[8].weight == Weight{-3, 1, 4, -3, 5, 1});
  CHECK(printed.back().weight == e6->rho());
}

TEST_CASE("weyl_dim") {
  CHECK(RootSystem::get(Series::E, 6)->weyl_dim(Weight{1, 0, 0, 0, 0, 0}) == 27);
  CHECK(RootSystem::get(Series::E, 6)->weyl_dim(Weight{0, 1, 0, 0, 0, 0}) == 78);
  CHECK(RootSystem::get(Series::A, 9)->weyl_dim(RootSystem::get(Series::A, 9)->fundamental(2)) == 45);
  CHECK(RootSystem::get(Series::D, 6)->weyl_dim(Weight{0, 0, 0, 0, 0, 1}) == 32);
  CHECK(RootSystem::get(Series::D, 5)->weyl_dim(Weight{0, 0, 0, 0, 2}) == 126);
  CHECK(RootSystem::get(Series::G, 2)->weyl_dim(Weight{1, 0}) == 7);
  CHECK(RootSystem::get(Series::G, 2)->weyl_dim(Weight{0, 1}) == 14);
  CHECK(RootSystem::get(Series::C, 3)->weyl_dim(Weight{0, 0, 1}) == 14);
  CHECK(RootSystem::get(Series::B, 3)->weyl_dim(Weight{0, 0, 1}) == 8);
  for (auto [s, r] : std::vector<std::pair<Series, int>>{{Series::A, 3}, {Series::E, 7}, {Series::C, 4}})
    CHECK(RootSystem::get(s, r)->weyl_dim(RootSystem::get(s, r)->zero()) == 1);
  CHECK_THROWS_AS(RootSystem::get(Series::A, 2)->weyl_dim(Weight{-1, 0}), std::invalid_argument);
}

TEST_CASE("minimal coset representatives") {
  auto e6 = RootSystem::get(Series::E, 6);
  const std::vector<int> one{1};
  size_t total = 0;
  for (const auto& level : e6->minimal_coset_reps(one)) total += level.size();
  CHECK(total == 27);
  CHECK(e6->minimal_coset_reps(one, 0) == std::vector<ReducedWord>{ReducedWord{}});

  auto d6 = RootSystem::get(Series::D, 6);
  const std::vector<int> six{6};
  CHECK(d6->minimal_coset_reps(six, 3).size() == 2);
  CHECK_THROWS(d6->minimal_coset_reps(std::vector<int>{}));
}

TEST_CASE("coset count times parabolic order is the Weyl order") {
  // |W| is the orbit size of rho; |W / W_P| that of omega_node, whose
  // stabilizer is W_P.
  for (auto [s, r] : std::vector<std::pair<Series, int>>{
           {Series::A, 2}, {Series::A, 3}, {Series::A, 4}, {Series::D, 4}, {Series::D, 5}, {Series::B, 3}, {Series::C, 3}}) {
    auto rs = RootSystem::get(s, r);
    const long order = orbit_size(*rs, rs->rho());
    for (int node = 1; node <= r; ++node) {
      const std::vector<int> marked{node};
      const long cosets = orbit_size(*rs, rs->fundamental(node));
      long reps = 0;
      for (const auto& level : rs->minimal_coset_reps(marked)) reps += static_cast<long>(level.size());
      CAPTURE(rs->name());
      CAPTURE(node);
      CHECK(reps == cosets);
      CHECK(order % cosets == 0);
    }
  }
}

TEST_CASE("length equals number of inversions") {
  std::mt19937 gen(7);
  for (auto [s, r] : std::vector<std::pair<Series, int>>{{Series::E, 6}, {Series::D, 6}, {Series::B, 4}, {Series::G, 2}}) {
    auto rs = RootSystem::get(s, r);
    std::uniform_int_distribution<int> coord(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
      Weight w = rs->zero();
      for (int& c : w.coords) c = coord(gen);
      auto res = rs->to_dominant(w);
      if (res.singular) continue;
      int inversions = 0;
      for (const auto& a : rs->positive_roots())
        if (rs->pairing(w, a) < 0) ++inversions;
      CHECK(res.length == inversions);
    }
  }
}

TEST_CASE("cominuscule nodes") {
  auto e6 = RootSystem::get(Series::E, 6);
  CHECK(e6->is_cominuscule(1));
  CHECK(e6->is_cominuscule(6));
  CHECK_FALSE(e6->is_cominuscule(2));
  auto g2 = RootSystem::get(Series::G, 2);
  CHECK_FALSE(g2->is_cominuscule(1));
  CHECK_FALSE(g2->is_cominuscule(2));
  CHECK(RootSystem::get(Series::C, 3)->is_cominuscule(3));
  CHECK_FALSE(RootSystem::get(Series::C, 3)->is_cominuscule(2));
  CHECK(e6->nilradical_size(std::vector<int>{1}) == 16);
}
