#include <doctest.h>

#include <cmath>
#include <random>

#include "stabgeo/coords.hpp"

using namespace stabgeo;

TEST_CASE("chart_to_stab on the wall gives the boundary parametrization") {
  const StabPoint s = chart_to_stab(ChartPoint{0, 0.0, 1.0, 0.0, 0.0});
  REQUIRE(s.is_boundary());
  CHECK(s.boundary().tau == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s.x() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(s.y() == 0.0);
}

TEST_CASE("chart_to_stab at beta = 1/2") {
  const StabPoint s = chart_to_stab(ChartPoint{0, 0.0, 0.5, 0.0, 0.0});
  REQUIRE(s.is_geometric());
  CHECK(std::abs(s.geometric().tau - Complex{0.5, 0.5}) < 1e-15);
  CHECK(std::abs(s.x() - 0.5 * std::log(2.0)) < 1e-15);
  CHECK(std::abs(s.y() + 0.25) < 1e-15);
}

TEST_CASE("chart_to_stab leaves algebraic points alone") {
  const StabPoint s = chart_to_stab(ChartPoint{0, 0.0, 1.1, 0.0, 0.0});
  REQUIRE(s.is_algebraic());
  CHECK(s.algebraic().k == 0);
  CHECK(s.algebraic().beta == 1.1);
  CHECK_THROWS_AS(chart_to_stab(ChartPoint{0, 0.0, 0.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(chart_to_stab(ChartPoint{0, 0.0, -1.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("stab_to_chart examples") {
  const ChartPoint a =
      stab_to_chart(StabPoint::geometric(Complex{0.5, 0.5}, 0.5 * std::log(2.0), -0.25), 0);
  CHECK(std::abs(a.alpha) < 1e-15);
  CHECK(std::abs(a.beta - 0.5) < 1e-15);
  CHECK(std::abs(a.x) < 1e-15);
  CHECK(std::abs(a.y) < 1e-15);

  const ChartPoint b = stab_to_chart(StabPoint::geometric(Complex{0.0, 1.0}), 0);
  CHECK(std::abs(b.alpha - 0.5 * std::log(2.0)) < 1e-15);
  CHECK(std::abs(b.beta - 0.25) < 1e-15);
  CHECK(std::abs(b.x) < 1e-15);
  CHECK(std::abs(b.y - 0.5) < 1e-15);
  const StabPoint back = chart_to_stab(b);
  CHECK(approx_equal(back, StabPoint::geometric(Complex{0.0, 1.0})));

  const ChartPoint c = stab_to_chart(StabPoint::boundary(0.5, std::log(2.0), 0.0), 0);
  CHECK(std::abs(c.alpha) < 1e-15);
  CHECK(c.beta == 1.0);
  CHECK(std::abs(c.x) < 1e-15);
}

TEST_CASE("stab_to_chart rejects the wrong chamber") {
  CHECK_THROWS_AS(stab_to_chart(StabPoint::boundary(1.5), 0), ChamberMismatch);
  CHECK_THROWS_AS(stab_to_chart(StabPoint::algebraic(2, 0.0, 1.5), 1), ChamberMismatch);
  CHECK_NOTHROW(stab_to_chart(StabPoint::boundary(1.5), 1));
}

TEST_CASE("construction validates the forms") {
  CHECK_THROWS_AS(StabPoint::geometric(Complex{0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(StabPoint::geometric(Complex{0.0, -1.0}), DomainError);
  CHECK_THROWS_AS(StabPoint::boundary(2.0), DomainError);
  CHECK_THROWS_AS(StabPoint::algebraic(0, 0.0, 0.9), DomainError);
  CHECK_THROWS_AS(StabPoint::boundary(std::nan("")), DomainError);
}

TEST_CASE("beta = 1 is stored in boundary form") {
  const StabPoint s = StabPoint::algebraic(3, 1.0, 1.0, 0.7, -0.2);
  REQUIRE(s.is_boundary());
  CHECK(s.chamber() == 3);
  CHECK(std::abs(s.boundary().tau - (3.0 + 1.0 / (1.0 + std::exp(1.0)))) < 1e-15);
  CHECK(std::abs(s.x() - (0.7 + std::log(1.0 + std::exp(1.0)))) < 1e-15);
}

TEST_CASE("project_closure") {
  const StabPoint g = StabPoint::geometric(Complex{0.0, 1.0});
  CHECK(approx_equal(project_closure(g), g, 0.0));

  const StabPoint p = project_closure(StabPoint::algebraic(0, 0.0, 1.1));
  REQUIRE(p.is_boundary());
  CHECK(std::abs(p.boundary().tau - 0.5) < 1e-15);
  CHECK(std::abs(p.x() - std::log(2.0)) < 1e-15);

  const StabPoint q = project_closure(StabPoint::algebraic(3, 1.0, 2.5, 0.7, -0.2));
  REQUIRE(q.is_boundary());
  CHECK(std::abs(q.boundary().tau - (3.0 + 1.0 / (1.0 + std::exp(1.0)))) < 1e-15);
  CHECK(std::abs(q.x() - (0.7 + std::log(1.0 + std::exp(1.0)))) < 1e-15);
  CHECK(q.y() == -0.2);
  CHECK(approx_equal(project_closure(q), q, 0.0));
}

TEST_CASE("c_act is an additive group action") {
  const StabPoint g = StabPoint::geometric(Complex{0.0, 1.0});
  const StabPoint moved = c_act(g, 1.0, 2.0);
  CHECK(moved.x() == 1.0);
  CHECK(moved.y() == 2.0);
  CHECK(approx_equal(c_act(g, 0.0, 0.0), g, 0.0));
  const StabPoint a = c_act(StabPoint::algebraic(0, 0.0, 1.1, 0.5, 0.5), -0.5, -0.5);
  CHECK(approx_equal(a, StabPoint::algebraic(0, 0.0, 1.1), 0.0));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double ux = u(rng), uy = u(rng), vx = u(rng), vy = u(rng);
    const StabPoint s = StabPoint::algebraic(1, u(rng), 1.5, u(rng), u(rng));
    const StabPoint lhs = c_act(c_act(s, ux, uy), vx, vy);
    const StabPoint rhs = c_act(s, ux + vx, uy + vy);
    // (x + u) + v and x + (u + v) may round differently; the action itself is exact addition.
    CHECK(lhs.x() == (s.x() + ux) + vx);
    CHECK(std::abs(lhs.x() - rhs.x()) < 1e-14);
    CHECK(std::abs(lhs.y() - rhs.y()) < 1e-14);
  }
}

TEST_CASE("round trip through every chart") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    ChartPoint p{static_cast<int>(std::floor(20.0 * u(rng))) - 10, 6.0 * u(rng) - 3.0,
                 i % 7 == 0 ? 1.0 : 0.001 + 0.999 * u(rng), 4.0 * u(rng) - 2.0, 2.0 * u(rng) - 1.0};
    const ChartPoint q = stab_to_chart(chart_to_stab(p), p.k);
    CHECK(q.k == p.k);
    CHECK(std::abs(q.alpha - p.alpha) <= 1e-12);
    CHECK(std::abs(q.beta - p.beta) <= 1e-12);
    CHECK(std::abs(q.x - p.x) <= 1e-12);
    CHECK(std::abs(q.y - p.y) <= 1e-12);
  }
}

TEST_CASE("geometric points have a chart in every chamber") {
  const StabPoint s = StabPoint::geometric(Complex{0.3, 0.7}, 0.2, -0.1);
  for (int k = -20; k <= 20; ++k) {
    const ChartPoint c = stab_to_chart(s, k);
    CHECK(c.beta > 0.0);
    CHECK(c.beta < 1.0);
    CHECK(approx_equal(chart_to_stab(c), s, 1e-12));
  }
}

TEST_CASE("quotient points drop the C-coordinates") {
  const QuotientPoint q = QuotientPoint::of(StabPoint::geometric(Complex{0.0, 1.0}, 3.0, 4.0));
  CHECK(q.representative().x() == 0.0);
  CHECK(q.representative().y() == 0.0);
  CHECK(QuotientPoint::algebraic(0, 0.0, 1.0).form() == Form::Boundary);
  const QuotientPoint p = project_closure(QuotientPoint::algebraic(0, 0.0, 1.1));
  CHECK(approx_equal(p, QuotientPoint::boundary(0.5), 1e-15));
}
