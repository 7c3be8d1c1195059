#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "polygossip/errors.hpp"
#include "polygossip/orthopoly.hpp"
#include "polygossip/quadrature.hpp"

using namespace polygossip;
using Q = boost::multiprecision::cpp_rational;

TEST_CASE("jacobi coefficients, exact values") {
  const auto k0 = jacobi_coeffs<Q>(Q(2), 0);
  CHECK(k0.a == Q(3, 4));
  CHECK(k0.b == Q(1, 4));
  const auto k1 = jacobi_coeffs<Q>(Q(2), 1);
  CHECK(k1.a == Q(10, 9));
  CHECK(k1.b == Q(2, 27));
  CHECK(k1.c == Q(5, 27));
  const auto d3 = jacobi_coeffs<Q>(Q(3), 0);
  CHECK(d3.a == Q(7, 10));
  CHECK(d3.b == Q(3, 10));
  const auto g = jacobi_general_coeffs<Q>(Q(1), Q(0), 1);
  CHECK(g.a == Q(10, 9));
  CHECK(g.b == Q(2, 27));
  CHECK(g.c == Q(5, 27));
  for (int a = 0; a < 4; ++a) CHECK(jacobi_general_coeffs<Q>(Q(a, 2), Q(a, 2), 0).b == 0);
}

TEST_CASE("jacobi coefficients: normalization and reduction, exact") {
  for (int d : {1, 2, 3, 10}) {
    const auto k0 = jacobi_coeffs<Q>(Q(d), 0);
    CHECK(k0.a + k0.b == 1);
    for (int t = 1; t <= 100; ++t) {
      const auto k = jacobi_coeffs<Q>(Q(d), t);
      CHECK(k.a + k.b - k.c == 1);
      const auto g = jacobi_general_coeffs<Q>(Q(d, 2), Q(0), t);
      CHECK(g.a == k.a);
      CHECK(g.b == k.b);
      CHECK(g.c == k.c);
    }
  }
  for (auto [a, b] : {std::pair{Q(1, 3), Q(-1, 2)}, std::pair{Q(5, 2), Q(7, 4)}})
    for (int t = 1; t <= 40; ++t) {
      const auto k = jacobi_general_coeffs<Q>(a, b, t);
      CHECK(k.a + k.b - k.c == 1);
    }
}

TEST_CASE("kesten-mckay coefficients") {
  const auto k0 = kesten_mckay_coeffs<Q>(3, 0);
  CHECK(k0.a == Q(3, 4));
  CHECK(k0.b == Q(1, 4));
  const auto k1 = kesten_mckay_coeffs<Q>(3, 1);
  CHECK(k1.a == Q(6, 5));
  CHECK(k1.c == Q(1, 5));
  const auto far = kesten_mckay_coeffs<double>(3, 80);
  CHECK(far.a == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(far.c == doctest::Approx(0.5).epsilon(1e-12));

  // independent oracle: L_0 = 1, L_1 = d + 1, L_{t+1} = 2 + (d-1) L_t,
  // a_t = d L_t / L_{t+1}, c_t = (d-1) L_{t-1} / L_{t+1}
  for (int d : {2, 3, 4, 5}) {
    std::vector<Q> L{Q(1), Q(d + 1)};
    for (int t = 1; t <= 60; ++t) L.push_back(Q(2) + Q(d - 1) * L[t]);
    for (int t = 1; t <= 60; ++t) {
      const auto k = kesten_mckay_coeffs<Q>(d, t);
      CHECK(k.b == 0);
      CHECK(k.a - k.c == 1);
      CHECK(k.a == Q(d) * L[t] / L[t + 1]);
      CHECK(k.c == Q(d - 1) * L[t - 1] / L[t + 1]);
    }
  }
  CHECK_THROWS_AS(kesten_mckay_recurrence(1), DomainError);
}

TEST_CASE("parameter checks") {
  CHECK_THROWS_AS(jacobi_recurrence(0), DomainError);
  CHECK_THROWS_AS(jacobi_general_recurrence(-1, 0), DomainError);
  CHECK_THROWS_AS(jacobi_general_recurrence(0, -1.5), DomainError);
  CHECK_THROWS_AS(jacobi_gap_recurrence(2, 0), DomainError);
  CHECK_THROWS_AS(jacobi_gap_recurrence(2, 2), DomainError);
  CHECK_THROWS_AS(shift_register_omega(0), DomainError);
  CHECK_THROWS_AS(shift_register_poly(2.5, 3, 0.1), DomainError);
  CHECK_THROWS_AS(kesten_mckay_density(2, 0.0), DomainError);
}

TEST_CASE("gap variant") {
  const Recurrence r = jacobi_gap_recurrence(2, 0.5);
  CHECK_FALSE(r.normalized());
  CHECK(r(0).a == doctest::Approx(1.0));
  CHECK(r(0).b == doctest::Approx(0.5));
  CHECK(r(1).c == doctest::Approx(5.0 / 27));
  const auto delta = normalization_tracker(r, 5);
  CHECK(delta[0] == 1.0);
  CHECK(delta[1] == doctest::Approx(1.5));
  // delta is the polynomial's value at 1
  for (int t = 0; t <= 5; ++t) CHECK(evaluate_recurrence(r, 1.0, t) == doctest::Approx(delta[t]));
  CHECK(evaluate_normalized(r, 1.0, 40) == doctest::Approx(1.0));

  const Recurrence tiny = jacobi_gap_recurrence(2, 1e-13);
  const Recurrence plain = jacobi_recurrence(2);
  for (int t = 0; t < 30; ++t) {
    CHECK(std::abs(tiny(t).a - plain(t).a) < 1e-10);
    CHECK(std::abs(tiny(t).b - plain(t).b) < 1e-10);
    CHECK(tiny(t).c == plain(t).c);
  }
  for (double d : normalization_tracker(tiny, 30)) CHECK(std::abs(d - 1.0) < 1e-10);

  // no overflow for long horizons and small gaps
  CHECK(std::isfinite(evaluate_normalized(jacobi_gap_recurrence(2, 1e-3), 0.3, 3000)));
}

TEST_CASE("evaluation") {
  for (const Recurrence& r : {jacobi_recurrence(2), jacobi_recurrence(3.5), jacobi_general_recurrence(0.3, 1.7),
                              kesten_mckay_recurrence(3), kesten_mckay_recurrence(2)})
    for (int t = 0; t <= 25; ++t) CHECK(evaluate_recurrence(r, 1.0, t) == doctest::Approx(1.0).epsilon(1e-12));
  const double v = evaluate_recurrence(jacobi_recurrence(2), 0.9, 6);
  CHECK(std::abs(v) < 1.0);
  CHECK(std::abs(v) < std::pow(0.9, 6));
  CHECK(evaluate_recurrence(kesten_mckay_recurrence(3), 1.0, 10) == doctest::Approx(1.0));
}

TEST_CASE("zeros lie inside (-1, 1)") {
  for (const Recurrence& r : {jacobi_recurrence(2), jacobi_general_recurrence(2.5, 0.5), kesten_mckay_recurrence(4)}) {
    for (int t : {1, 5, 12}) {
      const Eigen::VectorXd z = recurrence_roots(r, t);
      REQUIRE(z.size() == t);
      for (int i = 0; i < t; ++i) {
        CHECK(std::abs(z[i]) < 1.0);
        CHECK(std::abs(evaluate_recurrence(r, z[i], t)) < 1e-9);
        if (i > 0) CHECK(z[i] - z[i - 1] > 1e-6);
      }
    }
  }
}

TEST_CASE("chebyshev") {
  CHECK(chebyshev(3, 0.5, ChebyshevKind::first) == doctest::Approx(-1.0));
  CHECK(chebyshev(1, 0.37, ChebyshevKind::second) == doctest::Approx(0.74));
  for (int t = 0; t <= 20; ++t) {
    CHECK(chebyshev(t, 1.0, ChebyshevKind::first) == doctest::Approx(1.0));
    CHECK(chebyshev(t, 1.0, ChebyshevKind::second) == doctest::Approx(t + 1.0));
    const double th = 0.7;
    CHECK(chebyshev(t, std::cos(th), ChebyshevKind::first) == doctest::Approx(std::cos(t * th)));
    CHECK(chebyshev(t, std::cos(th), ChebyshevKind::second) ==
          doctest::Approx(std::sin((t + 1) * th) / std::sin(th)));
  }
}

TEST_CASE("shift-register parameter and polynomial") {
  CHECK(shift_register_omega(1.0) == doctest::Approx(1.0718).epsilon(1e-4));
  CHECK(shift_register_omega(0.5) == doctest::Approx(1.2038).epsilon(1e-4));
  CHECK(shift_register_omega(1e-12) == doctest::Approx(2.0).epsilon(1e-5));
  for (double g : {0.01, 0.3, 1.2}) {
    const double printed = 2 * (1 - std::sqrt(g * (1 - g / 4))) / std::pow(1 - g / 2, 2);
    CHECK(shift_register_omega(g) == doctest::Approx(printed).epsilon(1e-12));
  }
  for (double g : {1e-6, 0.1, 1.0, 1.9, 1.999999}) {
    const double w = shift_register_omega(g);
    CHECK(w > 1.0);
    CHECK(w < 2.0);
  }

  CHECK(shift_register_poly(1.5, 0, 0.3) == 1.0);
  CHECK(shift_register_poly(1.5, 1, 0.3) == doctest::Approx(0.3));
  CHECK(shift_register_poly(1.5, 5, 0.8) == doctest::Approx(shift_register_poly_by_recursion(1.5, 5, 0.8)));
  CHECK(shift_register_poly(1.0, 7, 0.6) == doctest::Approx(std::pow(0.6, 7)));
  for (double w : {1.05, 1.5, 1.9, 2.0})
    for (int t = 0; t <= 40; ++t) {
      CHECK(shift_register_poly(w, t, 1.0) == doctest::Approx(1.0).epsilon(1e-9));
      for (double l : {-0.95, -0.3, 0.0, 0.42, 0.99})
        CHECK(std::abs(shift_register_poly(w, t, l) - shift_register_poly_by_recursion(w, t, l)) < 1e-9);
    }
}

TEST_CASE("kesten-mckay density") {
  CHECK(kesten_mckay_density(3, 0.0) == doctest::Approx(3 / (2 * std::numbers::pi) * std::sqrt(8.0 / 9)));
  CHECK(kesten_mckay_density(3, 0.0) == doctest::Approx(0.4502).epsilon(1e-4));
  CHECK(kesten_mckay_density(3, 0.99) == 0.0);
  CHECK(kesten_mckay_edge(3) == doctest::Approx(2 * std::sqrt(2.0) / 3));
  // substitute lambda = e cos(theta) to remove the square-root endpoints
  for (int d : {3, 4, 7}) {
    const double e = kesten_mckay_edge(d);
    const QuadratureRule q = gauss_legendre(200, 0.0, std::numbers::pi);
    double total = 0;
    for (size_t i = 0; i < q.nodes.size(); ++i)
      total += q.weights[i] * kesten_mckay_density(d, e * std::cos(q.nodes[i])) * e * std::sin(q.nodes[i]);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(kesten_mckay_measure(d).total_mass() == doctest::Approx(1.0).epsilon(1e-5));
  }
}

TEST_CASE("gauss-legendre") {
  const QuadratureRule q = gauss_legendre(8, -1, 3);
  double sum = 0;
  for (double w : q.weights) sum += w;
  CHECK(sum == doctest::Approx(4.0));
  // exact for degree 15
  double integral = 0;
  for (size_t i = 0; i < q.nodes.size(); ++i) integral += q.weights[i] * std::pow(q.nodes[i], 15);
  CHECK(integral == doctest::Approx((std::pow(3.0, 16) - 1) / 16).epsilon(1e-12));
  for (size_t i = 1; i < q.nodes.size(); ++i) CHECK(q.nodes[i] > q.nodes[i - 1]);
}

TEST_CASE("oracle: chebyshev measures") {
  const int n = 200;
  DiscreteMeasure first, uniform;
  first.points.resize(n);
  first.weights.resize(n);
  uniform = first;
  for (int k = 0; k < n; ++k) {
    const double x = std::cos((2 * k + 1) * std::numbers::pi / (2 * n));
    first.points[k] = uniform.points[k] = x;
    uniform.weights[k] = 1.0 / n;
    first.weights[k] = 1.0 / (n * (1 - x));
  }
  // tau = (1 - l) sigma: sigma ~ (1 - l)^{-1} (1 - l^2)^{-1/2} gives T_t
  const auto o1 = oracle_from_measure(first, 20);
  // uniform sigma gives tau ~ sqrt((1 - l)/(1 + l)), the fourth-kind
  // polynomials W_t(cos th) = sin((t + 1/2) th)/sin(th/2) with W_t(1) = 2t + 1
  const auto o4 = oracle_from_measure(uniform, 20);
  for (int t = 0; t <= 20; ++t)
    for (double th : {0.1, 0.9, 2.0, 3.0}) {
      const double l = std::cos(th);
      CHECK(std::abs(o1.evaluate(t, l) - std::cos(t * th)) < 1e-6);
      CHECK(std::abs(o1.evaluate_monomial(t, l) - std::cos(t * th)) < 1e-6);
      const double w4 = std::sin((t + 0.5) * th) / std::sin(th / 2) / (2 * t + 1);
      CHECK(std::abs(o4.evaluate(t, l) - w4) < 1e-6);
    }
}

TEST_CASE("oracle: two-point measure is solved at degree 2") {
  DiscreteMeasure m;
  m.points = Eigen::Vector3d(1.0, 0.3, -0.6);
  m.weights = Eigen::Vector3d(0.5, 0.2, 0.3);
  const auto o = oracle_from_measure(m, 5);
  CHECK(o.max_degree() == 2);
  CHECK(o.perfect_degree == 2);
  CHECK(o.evaluate(0, 0.77) == 1.0);
  for (double l : {0.3, -0.6}) {
    CHECK(std::abs(o.evaluate_monomial(2, l)) < 1e-14);
    CHECK(std::abs(o.evaluate(2, l)) < 1e-12);
  }
  CHECK(o.evaluate(2, 1.0) == doctest::Approx(1.0));
  // only the two points away from 1 are kept
  CHECK(o.sigma.size() == 2);
}

TEST_CASE("oracle: degenerate measure") {
  DiscreteMeasure m;
  m.points = Eigen::VectorXd::Constant(1, 1.0);
  m.weights = Eigen::VectorXd::Constant(1, 1.0);
  CHECK_THROWS_AS(oracle_from_measure(m, 3), DomainError);
}

TEST_CASE("oracle: orthogonality, normalization and optimality") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + trial % 9;
    DiscreteMeasure m;
    m.points.resize(n);
    m.weights.resize(n);
    for (int i = 0; i < n; ++i) {
      m.points[i] = unif(rng);
      m.weights[i] = 0.1 + std::abs(unif(rng));
    }
    const auto o = oracle_from_measure(m, n + 3);
    CHECK(o.max_degree() == n);
    for (int s = 0; s <= o.max_degree(); ++s) {
      CHECK(std::abs(o.evaluate_monomial(s, 1.0) - 1.0) < 1e-9);
      for (int t = 0; t < s; ++t) {
        const double scale = std::sqrt(std::max(o.tau_inner(s, s), 1e-300) * o.tau_inner(t, t));
        CHECK(std::abs(o.tau_inner(s, t)) <= 1e-8 * std::max(scale, 1e-12));
      }
    }
    const auto roots = recurrence_roots(o.recurrence(), std::min(n - 1, 6));
    for (int i = 0; i < roots.size(); ++i) CHECK(std::abs(roots[i]) <= 1.0);

    // optimality against random Q(l) = 1 + sum c_k (l - 1)^k
    auto sigma_norm = [&](auto&& f) {
      double s = 0;
      for (int i = 0; i < n; ++i) s += m.weights[i] * f(m.points[i]) * f(m.points[i]);
      return s;
    };
    for (int t = 1; t < n; ++t) {
      const double best = sigma_norm([&](double l) { return o.evaluate_monomial(t, l); });
      for (int k = 0; k < 200 / 9 + 1; ++k) {
        std::vector<double> c(t);
        for (double& x : c) x = normal(rng);
        const double other = sigma_norm([&](double l) {
          double v = 1, p = 1;
          for (int j = 0; j < t; ++j) {
            p *= l - 1;
            v += c[j] * p;
          }
          return v;
        });
        CHECK(best <= other * (1 + 1e-9) + 1e-14);
      }
    }
  }
}

TEST_CASE("oracle matches closed-form jacobi recurrences") {
  for (auto [a, b] : {std::pair{0.5, 0.0}, std::pair{0.7, 0.3}, std::pair{2.0, 1.0}}) {
    const auto o = oracle_from_measure(jacobi_weight_measure(a, b), 20);
    const Recurrence r = jacobi_general_recurrence(a, b);
    for (int t = 0; t < 20; ++t) {
      CHECK(std::abs(o.coeffs[t].a - r(t).a) < 1e-6);
      CHECK(std::abs(o.coeffs[t].b - r(t).b) < 1e-6);
      CHECK(std::abs(o.coeffs[t].c - r(t).c) < 1e-6);
    }
  }
}

TEST_CASE("oracle matches the kesten-mckay recurrence for d = 4") {
  const auto o = oracle_from_measure(kesten_mckay_measure(4), 15);
  const Recurrence r = kesten_mckay_recurrence(4);
  for (int t = 0; t < 15; ++t) {
    CHECK(std::abs(o.coeffs[t].a - r(t).a) < 1e-5);
    CHECK(std::abs(o.coeffs[t].b - r(t).b) < 1e-5);
    CHECK(std::abs(o.coeffs[t].c - r(t).c) < 1e-5);
  }
}
