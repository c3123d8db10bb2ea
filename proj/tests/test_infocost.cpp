#include <doctest.h>

#include <cmath>

#include "infotrade/constructions.hpp"
#include "infotrade/errors.hpp"
#include "infotrade/generators.hpp"
#include "infotrade/infocost.hpp"
#include "infotrade/triviality.hpp"
#include "oracles.hpp"

using namespace infotrade;
using doctest::Approx;

TEST_CASE("costs of elementary protocols") {
  auto u = Measure::uniform(2, 2);
  CHECK(internal_ic(ProtocolTree::leaf(0), u) == 0.0);
  CHECK(external_ic(ProtocolTree::leaf(0), u) == 0.0);

  auto xs = ProtocolTree::alice({0.0, 1.0}, ProtocolTree::leaf(0), ProtocolTree::leaf(1));
  auto ic = internal_cost(transcript_distribution(xs, 2, 2), u);
  CHECK(ic.alice_reveals == Approx(1.0).epsilon(1e-14));
  CHECK(ic.bob_reveals == Approx(0.0));
  CHECK(ic.total() == Approx(1.0).epsilon(1e-14));

  CHECK(external_ic(half_guess_protocol(and_function(), 0.1), u) == Approx(0.4).epsilon(1e-13));
  CHECK_THROWS_AS(internal_ic(xs, Measure::uniform(3, 2)), DimensionError);
}

TEST_CASE("costs agree with entropy oracle and serial reference") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = instance_rng(31, i);
    const auto n = uniform_size(rng, 1, 4), m = uniform_size(rng, 1, 4);
    auto pi = random_protocol(rng, n, m, 2, 6);
    auto mu = random_measure(rng, n, m, 0.3);
    auto td = transcript_distribution(pi, n, m);
    const double in = internal_ic(td, mu), ex = external_ic(td, mu);
    CHECK(std::abs(in - oracle::internal(pi, mu)) <= 1e-10);
    CHECK(std::abs(ex - oracle::external(pi, mu)) <= 1e-10);
    CHECK(std::abs(in - serial::internal_cost(td, mu).total()) <= 1e-12);
    CHECK(std::abs(ex - serial::external_ic(td, mu)) <= 1e-12);
    CHECK(in >= 0.0);
    CHECK(in <= ex + 1e-10);
  }
}

TEST_CASE("product priors: internal equals external") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = instance_rng(32, i);
    auto pi = random_protocol(rng, 3, 3, 2, 6);
    auto a = random_distribution(rng, 3), b = random_distribution(rng, 3);
    auto mu = product(a.probs(), b.probs());
    CHECK(std::abs(internal_ic(pi, mu) - external_ic(pi, mu)) <= 1e-10);
  }
}

TEST_CASE("leaf relabeling and zero-marginal rows do not change costs") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = instance_rng(33, i);
    auto pi = random_protocol(rng, 3, 2, 3, 5);
    auto mu3 = random_measure(rng, 2, 2);
    auto relabeled = pi.map_outputs([](int z) { return (z + 1) % 3; });
    // Embed mu3 into a 3x2 prior whose middle row has no mass.
    auto padded = Measure(3, 2, {mu3(0, 0), mu3(0, 1), 0.0, 0.0, mu3(1, 0), mu3(1, 1)});
    CHECK(internal_ic(pi, padded) == Approx(internal_ic(relabeled, padded)).epsilon(1e-15));
    // Same protocol with row 1 deleted.
    std::vector<Node> nodes(pi.nodes().begin(), pi.nodes().end());
    for (auto& n : nodes)
      if (n.kind == NodeKind::Alice) n.send_one_prob = {n.send_one_prob[0], n.send_one_prob[2]};
    auto squeezed = ProtocolTree::from_nodes(nodes);
    CHECK(std::abs(internal_ic(pi, padded) - internal_ic(squeezed, mu3)) <= 1e-12);
    CHECK(std::abs(external_ic(pi, padded) - external_ic(squeezed, mu3)) <= 1e-12);
  }
}

TEST_CASE("transcript l1 distance") {
  auto xs = transcript_distribution(ProtocolTree::alice({0.0, 1.0}, ProtocolTree::leaf(0), ProtocolTree::leaf(1)), 2, 2);
  CHECK(transcript_l1_distance(xs, {0, 1}, {0, 1}) == 0.0);
  CHECK(transcript_l1_distance(xs, {0, 1}, {1, 1}) == 2.0);
  for (double eps : {0.01, 0.05, 0.1}) {
    auto td = transcript_distribution(and_half_error_protocol(eps), 2, 2);
    CHECK(transcript_l1_distance(td, {1, 1}, {0, 0}) >= 2 * eps);
  }
  CHECK_THROWS(transcript_l1_distance(xs, {2, 0}, {0, 0}));
}

TEST_CASE("general lower bound") {
  auto u = Measure::uniform(2, 2);
  CHECK(support_delta(u) == Approx(0.125));
  auto fig = and_half_error_protocol(0.05);
  auto same = general_lower_bound(fig, u, {0, 1}, {0, 1});
  CHECK(same.lhs == 0.0);
  CHECK(same.holds);
  CHECK_THROWS_AS(general_lower_bound(fig, Measure::from_matrix({{0.5, 0.0}, {0.0, 0.5}}), {0, 0}, {1, 1}),
                  DomainError);

  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = instance_rng(34, i);
    const auto n = uniform_size(rng, 1, 4), m = uniform_size(rng, 1, 4);
    auto mu = random_measure(rng, n, m, 0.3);
    auto pi = random_protocol(rng, n, m, 2, 6);
    auto supp = mu.support();
    auto a = supp[uniform_size(rng, 0, supp.size() - 1)];
    auto g = support_graph(mu);
    const auto& comp = g.components[static_cast<std::size_t>(g.component(a))].members;
    auto b = comp[uniform_size(rng, 0, comp.size() - 1)];
    auto r = general_lower_bound(pi, mu, a, b);
    CHECK(r.holds);
    CHECK(r.context.at("path_length").get<std::size_t>() <= n + m);
    CHECK(r.lhs <= external_ic(pi, mu) + 1e-9);
  }
}
