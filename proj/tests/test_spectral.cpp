#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "polygossip/errors.hpp"
#include "polygossip/spectral.hpp"

using namespace polygossip;

namespace {

Graph family(GraphFamily f, int n) {
  GraphSpec s;
  s.family = f;
  s.n = n;
  return generate(s);
}

Graph torus(std::vector<int> dims) {
  GraphSpec s;
  s.family = GraphFamily::torus;
  s.dims = std::move(dims);
  return generate(s);
}

}  // namespace

TEST_CASE("K4 spectrum") {
  const auto s = eigendecompose(build_gossip_matrix(family(GraphFamily::complete, 4), MatrixKind::uniform_degree));
  CHECK(s.eigenvalues[0] == doctest::Approx(1.0));
  for (int i = 1; i < 4; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(-1.0 / 3));
  CHECK(s.gap == doctest::Approx(4.0 / 3));
  CHECK(s.absolute_gap == doctest::Approx(2.0 / 3));
}

TEST_CASE("C4 with A/2 is bipartite") {
  const auto s = eigendecompose(build_gossip_matrix(family(GraphFamily::cycle, 4), MatrixKind::adjacency_over_d));
  const std::vector<double> expect{1, 0, 0, -1};
  for (int i = 0; i < 4; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(expect[i]).epsilon(1e-12));
  CHECK(s.absolute_gap == doctest::Approx(0.0));
}

TEST_CASE("single vertex") {
  const auto s = eigendecompose(build_gossip_matrix(family(GraphFamily::path, 1), MatrixKind::uniform_degree));
  REQUIRE(s.size() == 1);
  CHECK(s.eigenvalues[0] == 1.0);
  CHECK(s.gap == 1.0);
  const auto m = spectral_measure_at_vertex(s, 0);
  CHECK(m.total_mass() == doctest::Approx(1.0));
  CHECK(return_probability(m, 7) == doctest::Approx(1.0));
}

TEST_CASE("decomposition invariants on random graphs") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Graph g = oracle::random_connected_graph(30, 0.08, seed);
    const GossipMatrix w = build_gossip_matrix(g, MatrixKind::uniform_degree);
    const auto s = eigendecompose(w);
    const Eigen::MatrixXd m = w.dense();
    CHECK((m * s.eigenvectors - s.eigenvectors * s.eigenvalues.asDiagonal()).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((s.eigenvectors.transpose() * s.eigenvectors - Eigen::MatrixXd::Identity(30, 30)).cwiseAbs().maxCoeff() <
          1e-8);
    CHECK(std::abs(s.eigenvalues[0] - 1.0) < 1e-9);
    // top eigenvector is constant
    const Eigen::VectorXd u = s.eigenvectors.col(0);
    CHECK((u.array() - u.mean()).abs().maxCoeff() < 1e-8);
    for (int i = 0; i + 1 < s.size(); ++i) CHECK(s.eigenvalues[i] >= s.eigenvalues[i + 1]);
    CHECK(s.absolute_gap <= s.gap);
    // against an independent solve
    const auto e = oracle::eig(m);
    CHECK((e.values - s.eigenvalues).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("dense limit") {
  const GossipMatrix w = build_gossip_matrix(family(GraphFamily::cycle, 50), MatrixKind::uniform_degree);
  CHECK_THROWS_AS(eigendecompose(w, true, 40), CapabilityError);
}

TEST_CASE("vertex measures") {
  SUBCASE("complete graph") {
    const int n = 6;
    const auto s = eigendecompose(build_gossip_matrix(family(GraphFamily::complete, n), MatrixKind::uniform_degree));
    for (int v = 0; v < n; ++v) {
      const auto m = aggregate(spectral_measure_at_vertex(s, v));
      REQUIRE(m.size() == 2);
      CHECK(m.points[0] == doctest::Approx(1.0));
      CHECK(m.weights[0] == doctest::Approx(1.0 / n));
      CHECK(m.points[1] == doctest::Approx(-1.0 / (n - 1)));
      CHECK(m.weights[1] == doctest::Approx((n - 1.0) / n));
    }
  }
  SUBCASE("vertex-transitive graph") {
    const auto s = eigendecompose(build_gossip_matrix(torus({5, 6}), MatrixKind::uniform_degree));
    const auto ref = aggregate(spectral_measure_at_vertex(s, 0));
    for (int v : {1, 7, 29}) {
      const auto m = aggregate(spectral_measure_at_vertex(s, v));
      REQUIRE(m.size() == ref.size());
      CHECK((m.points - ref.points).cwiseAbs().maxCoeff() < 1e-9);
      CHECK((m.weights - ref.weights).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
  SUBCASE("weights sum to one") {
    const Graph g = oracle::random_connected_graph(25, 0.1, 3);
    const auto s = eigendecompose(build_gossip_matrix(g, MatrixKind::max_neighbor_degree));
    for (int v = 0; v < 25; ++v) CHECK(std::abs(spectral_measure_at_vertex(s, v).total_mass() - 1.0) < 1e-9);
  }
}

TEST_CASE("signal measures") {
  const Graph g = oracle::random_connected_graph(20, 0.15, 8);
  const auto s = eigendecompose(build_gossip_matrix(g, MatrixKind::uniform_degree));

  SUBCASE("constant signal has no mass") {
    CHECK(spectral_measure_of_signal(s, Eigen::VectorXd::Constant(20, 3.5)).total_mass() < 1e-20);
  }
  SUBCASE("second eigenvector") {
    const auto m = spectral_measure_of_signal(s, s.eigenvectors.col(1));
    CHECK(m.weights[0] == doctest::Approx(1.0));
    CHECK(m.points[0] == doctest::Approx(s.eigenvalues[1]));
    CHECK(m.total_mass() == doctest::Approx(1.0));
  }
  SUBCASE("mass and Parseval") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Eigen::VectorXd xi = oracle::gaussian(20, seed);
      const auto m = spectral_measure_of_signal(s, xi);
      CHECK(m.size() == 19);
      CHECK(std::abs(m.total_mass() - oracle::consensus_error2(xi, xi)) < 1e-9);
      CHECK(std::abs(m.total_mass() + 20 * xi.mean() * xi.mean() - xi.squaredNorm()) < 1e-8);
    }
  }
  SUBCASE("C4") {
    const auto c = eigendecompose(build_gossip_matrix(family(GraphFamily::cycle, 4), MatrixKind::adjacency_over_d));
    Eigen::VectorXd xi(4);
    xi << 0.3, -1.2, 2.0, 0.7;
    CHECK(std::abs(spectral_measure_of_signal(c, xi).total_mass() - oracle::consensus_error2(xi, xi)) < 1e-9);
  }
}

TEST_CASE("aggregation and distinct eigenvalues") {
  const auto s = eigendecompose(build_gossip_matrix(family(GraphFamily::cycle, 8), MatrixKind::adjacency_over_d));
  // cos(2 pi k / 8): 1, +-sqrt(2)/2, 0, -1; all but 1 and -1 doubled
  CHECK(distinct_nonunit_eigenvalues(s) == 4);
  const auto m = aggregate(spectral_measure_at_vertex(s, 0));
  CHECK(m.size() == 5);
  CHECK(m.total_mass() == doctest::Approx(1.0));
  for (int i = 0; i + 1 < m.size(); ++i) CHECK(m.points[i] > m.points[i + 1]);
}

TEST_CASE("spectral dimension") {
  SUBCASE("synthetic measure with sigma([1-E,1]) = E") {
    const int n = 200000;
    DiscreteMeasure m;
    m.points.resize(n);
    m.weights = Eigen::VectorXd::Constant(n, 1.0 / n);
    for (int k = 0; k < n; ++k) m.points[k] = 1.0 - (k + 1.0) / n;
    CHECK(spectral_dimension_estimate(m, 0.05, 0.5) == doctest::Approx(2.0).epsilon(1e-3));
  }
  SUBCASE("2D torus") {
    const auto s = eigendecompose(build_gossip_matrix(torus({40, 40}), MatrixKind::uniform_degree));
    const double ds = spectral_dimension_estimate(spectral_measure_at_vertex(s, 0), 0.05, 0.5);
    CHECK(ds > 1.5);
    CHECK(ds < 2.5);
  }
  SUBCASE("path") {
    const auto s = eigendecompose(build_gossip_matrix(family(GraphFamily::path, 400), MatrixKind::uniform_degree));
    const double ds = spectral_dimension_estimate(spectral_measure_at_vertex(s, 200), 0.05, 0.5);
    CHECK(ds > 0.6);
    CHECK(ds < 1.4);
  }
  SUBCASE("too few usable samples") {
    DiscreteMeasure m;
    m.points = Eigen::VectorXd::Constant(1, -0.5);
    m.weights = Eigen::VectorXd::Constant(1, 1.0);
    CHECK_THROWS_AS(spectral_dimension_estimate(m, 0.05, 0.5), EstimationError);
  }
}

TEST_CASE("return probabilities") {
  const auto s = eigendecompose(build_gossip_matrix(family(GraphFamily::cycle, 4), MatrixKind::adjacency_over_d));
  const auto m = spectral_measure_at_vertex(s, 0);
  CHECK(return_probability(m, 0) == doctest::Approx(1.0));
  const auto e = oracle::eig(build_gossip_matrix(family(GraphFamily::cycle, 4), MatrixKind::adjacency_over_d).dense());
  double expect = 0;
  for (int i = 0; i < 4; ++i) {
    const double u = e.vectors(0, i);
    expect += u * u * std::pow((1 + e.values[i]) / 2, 2);
  }
  CHECK(return_probability(m, 2) == doctest::Approx(expect).epsilon(1e-12));
  // lazy walk on C4 from a vertex: P(X_2 = start) = 3/8
  CHECK(return_probability(m, 2) == doctest::Approx(0.375));
  const auto g = oracle::random_connected_graph(20, 0.1, 1);
  const auto mg = spectral_measure_at_vertex(eigendecompose(build_gossip_matrix(g, MatrixKind::uniform_degree)), 3);
  for (int t = 0; t < 30; ++t) CHECK(return_probability(mg, t + 1) <= return_probability(mg, t) + 1e-15);
}
