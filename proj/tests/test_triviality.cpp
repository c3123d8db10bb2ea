#include <doctest.h>

#include <set>

#include "infotrade/errors.hpp"
#include "infotrade/generators.hpp"
#include "infotrade/infocost.hpp"
#include "infotrade/triviality.hpp"

using namespace infotrade;

namespace {
const Measure kDiag = Measure::from_matrix({{0.5, 0.0}, {0.0, 0.5}});
const Measure kAndSupport = Measure::from_matrix({{1.0 / 3, 1.0 / 3}, {1.0 / 3, 0.0}});
}  // namespace

TEST_CASE("support graph components") {
  CHECK(support_graph(Measure::uniform(3, 4)).components.size() == 1);

  auto d = support_graph(kDiag);
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0].members == std::vector<InputPair>{{0, 0}});
  CHECK(d.components[1].members == std::vector<InputPair>{{1, 1}});

  auto a = support_graph(kAndSupport);
  REQUIRE(a.components.size() == 1);
  CHECK(a.components[0].rows == std::vector<std::size_t>{0, 1});
  CHECK(a.components[0].cols == std::vector<std::size_t>{0, 1});

  // Components partition the support; rows/cols are exactly those appearing.
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = instance_rng(41, i);
    auto mu = random_measure(rng, uniform_size(rng, 1, 6), uniform_size(rng, 1, 6), 0.6);
    auto g = support_graph(mu);
    std::size_t total = 0;
    for (std::size_t c = 0; c < g.components.size(); ++c) {
      total += g.components[c].members.size();
      std::set<std::size_t> rows, cols;
      for (auto p : g.components[c].members) {
        CHECK(g.component(p) == static_cast<int>(c));
        rows.insert(p.x);
        cols.insert(p.y);
      }
      CHECK(std::vector<std::size_t>(rows.begin(), rows.end()) == g.components[c].rows);
      CHECK(std::vector<std::size_t>(cols.begin(), cols.end()) == g.components[c].cols);
    }
    CHECK(total == mu.support().size());
  }
}

TEST_CASE("shortest support paths") {
  auto p = shortest_support_path(kAndSupport, {0, 1}, {1, 0});
  REQUIRE(p);
  CHECK(p->size() == 3);
  CHECK_FALSE(shortest_support_path(kDiag, {0, 0}, {1, 1}));
}

TEST_CASE("internal triviality") {
  CHECK(is_internal_trivial(xor_function(), kDiag).trivial);
  auto a = is_internal_trivial(and_function(), Measure::uniform(2, 2));
  CHECK_FALSE(a.trivial);
  CHECK(a.violating_component == 0u);
  CHECK(is_internal_trivial(constant_function(3, 3, 1), Measure::uniform(3, 3)).trivial);
  CHECK_THROWS_AS(is_internal_trivial(and_function(), Measure::uniform(3, 2)), DimensionError);
}

TEST_CASE("distributional triviality") {
  auto x = is_distributional_trivial(xor_function(), kDiag);
  CHECK(x.trivial);
  CHECK(x.row_classes[0] == std::vector<std::size_t>{0, 1});

  auto a = is_distributional_trivial(and_function(), Measure::uniform(2, 2));
  CHECK_FALSE(a.trivial);
  CHECK(a.row_overlap == std::vector<std::size_t>{1});
  CHECK(a.col_overlap == std::vector<std::size_t>{1});
  CHECK(is_distributional_trivial(constant_function(2, 3, 0), Measure::uniform(2, 3)).trivial);
}

TEST_CASE("zero information protocol") {
  auto xp = zero_ic_protocol(xor_function(), kDiag);
  CHECK(xp.size() == 1);
  CHECK(distributional_error(xp, xor_function(), kDiag) == 0.0);
  CHECK(internal_ic(xp, kDiag) == 0.0);
  CHECK(zero_ic_protocol(constant_function(2, 2, 1), Measure::uniform(2, 2)).size() == 1);
  CHECK_THROWS_AS(zero_ic_protocol(and_function(), Measure::uniform(2, 2)), DomainError);

  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = instance_rng(42, i);
    const auto n = uniform_size(rng, 1, 5), m = uniform_size(rng, 1, 5);
    const int k = static_cast<int>(uniform_size(rng, 1, std::min(n, m)));
    auto inst = random_planted_partition(rng, n, m, k);
    CHECK(is_distributional_trivial(inst.f, inst.mu).trivial);
    auto pi = zero_ic_protocol(inst.f, inst.mu);
    CHECK(internal_ic(pi, inst.mu) <= 1e-12);
    CHECK(distributional_error(pi, inst.f, inst.mu) == 0.0);
  }
}

TEST_CASE("AND blocks") {
  auto g = support_graph(kAndSupport);
  auto b = find_and_block(and_function(), kAndSupport, g, 0);
  REQUIRE(b);
  CHECK(b->x == 0);
  CHECK(b->x2 == 1);
  CHECK(b->y == 0);
  CHECK(b->y2 == 1);
  CHECK(b->z0 == 0);
  CHECK(b->z1 == 1);

  auto u = Measure::uniform(2, 2);
  CHECK_FALSE(find_and_block(and_function(), u, support_graph(u), 0));
  CHECK_THROWS(find_and_block(and_function(), u, support_graph(u), 3));

  // 3x3 example: the 0' symbol (2 here) forms one component and no AND block appears in it.
  auto f = FunctionTable::from_matrix({{0, 1, 2}, {1, 0, 2}, {2, 2, 2}});
  auto mu = Measure::normalized(3, 3, {1, 1, 0, 1, 1, 0, 0, 0, 1});
  auto gg = support_graph(mu);
  const auto corner = static_cast<std::size_t>(gg.component({2, 2}));
  CHECK_FALSE(find_and_block(f, mu, gg, corner));
}

TEST_CASE("half-error precondition cases") {
  CHECK(half_error_precondition(xor_function(), kDiag).status == HalfErrorCase::NotApplicable);
  auto nc = half_error_precondition(and_function(), Measure::uniform(2, 2));
  CHECK(nc.status == HalfErrorCase::NonConstantOnComponent);
  REQUIRE(nc.a);
  REQUIRE(nc.b);
  CHECK(and_function()(nc.a->x, nc.a->y) != and_function()(nc.b->x, nc.b->y));
  CHECK(half_error_precondition(and_function(), kAndSupport).status == HalfErrorCase::AndBlockPresent);
  // Staircase support; f is 0 on it and 1 only at (2,0), which completes no three-corner pattern.
  auto stair = Measure::normalized(3, 3, {1, 1, 0, 0, 1, 1, 0, 0, 1});
  auto g = FunctionTable::from_matrix({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
  CHECK(half_error_precondition(g, stair).status == HalfErrorCase::Uncovered);
  CHECK(std::string(to_string(HalfErrorCase::Uncovered)) == "uncovered");
}
