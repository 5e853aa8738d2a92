#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "stabgeo/metric.hpp"
#include "stabgeo/paths.hpp"
#include "stabgeo/verify.hpp"

using namespace stabgeo;

TEST_CASE("metric names round trip") {
  for (MetricKind m : {MetricKind::D, MetricKind::DQuotient, MetricKind::DZ, MetricKind::DHyp,
                       MetricKind::DMass, MetricKind::DQuotientMass})
    CHECK(metric_from_string(to_string(m)) == m);
  CHECK(to_string(MetricKind::DQuotient) == "dbar");
  CHECK_THROWS_AS(metric_from_string("euclid"), DomainError);
}

TEST_CASE("metric_distance rejects points of the wrong space") {
  const AnyPoint h = HPoint(0, 1);
  const AnyPoint s = StabPoint::geometric(Complex{0, 1});
  CHECK_THROWS_AS(metric_distance(MetricKind::D, h, s), DomainError);
  CHECK_THROWS_AS(metric_distance(MetricKind::DZ, s, s), DomainError);
  CHECK(metric_distance(MetricKind::DZ, h, AnyPoint{HPoint(0, 2)}) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("polyline validation") {
  CHECK_THROWS_AS(Polyline({HPoint(0, 1)}, MetricKind::DZ), DomainError);
  CHECK_THROWS_AS(Polyline({HPoint(0, 1), HPoint(0, 1)}, MetricKind::DZ), DomainError);
  CHECK_THROWS_AS(Polyline({HPoint(0, 1), StabPoint::geometric(Complex{0, 2})}, MetricKind::DZ),
                  DomainError);
  const Polyline p({HPoint(0, 1), HPoint(0, 4)}, MetricKind::DHyp);
  CHECK(path_length(p) == doctest::Approx(std::log(4.0)));
  const Polyline q = p.with_inserted(1, HPoint(0, 2));
  CHECK(q.size() == 3);
  CHECK(path_length(q) == doctest::Approx(std::log(4.0)));
  CHECK_THROWS_AS(p.with_inserted(3, HPoint(0, 2)), DomainError);
  const auto cum = cumulative_lengths(q);
  CHECK(cum.front() == 0.0);
  CHECK(cum[1] == doctest::Approx(std::log(2.0)));
}

TEST_CASE("refining a polyline never shortens it") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const HPoint a = random_interior_hpoint(rng), b = random_interior_hpoint(rng);
    const HPoint m(Complex{uniform(rng, -3, 3), uniform(rng, 0.1, 3)});
    if (m == a || m == b) continue;
    const Polyline coarse({a, b}, MetricKind::DZ);
    const Polyline fine = coarse.with_inserted(1, m);
    CHECK(path_length(fine) >= path_length(coarse) - 1e-12);
  }
}

TEST_CASE("additivity along a vertical geodesic") {
  std::vector<AnyPoint> pts;
  for (int i = 0; i <= 20; ++i) pts.emplace_back(HPoint(0.3, std::exp(0.1 * i)));
  const GeodesicReport r = additivity_check(pts, MetricKind::DHyp);
  CHECK(r.is_geodesic_within);
  CHECK(r.additivity_defect < 1e-12);
  const Reparametrization rp = reparametrize_arclength(pts, MetricKind::DHyp);
  CHECK(rp.params.front() == 0.0);
  CHECK(rp.params.back() == 1.0);
  CHECK(rp.params[10] == doctest::Approx(0.5));

  // A detour is not geodesic.
  std::vector<AnyPoint> bent{HPoint(0, 1), HPoint(3, 2), HPoint(0, 4)};
  CHECK_FALSE(additivity_check(bent, MetricKind::DHyp).is_geodesic_within);
  CHECK_THROWS_AS(reparametrize_arclength(bent, MetricKind::DHyp), DomainError);
}

TEST_CASE("dZ geodesic points split the distance") {
  const HPoint i1(0, 1), i2(0, 2);
  CHECK(dZ_geodesic_point(i1, i2, 0.0) == i1);
  CHECK(dZ_geodesic_point(i1, i2, 1.0) == i2);
  const HPoint half = dZ_geodesic_point(i1, i2, 0.5);
  CHECK(std::abs(half.z().real()) < 1e-12);
  CHECK(std::abs(d_Z(i1, half) - 0.5 * std::log(2.0)) <= 1e-9);
  CHECK(std::abs(d_Z(half, i2) - 0.5 * std::log(2.0)) <= 1e-9);

  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const HPoint a = random_interior_hpoint(rng), b = random_interior_hpoint(rng);
    const double total = d_Z(a, b);
    const double s = t % 2 ? 1.0 / 3.0 : uniform(rng, 0.05, 0.95);
    const HPoint m = dZ_geodesic_point(a, b, s);
    CHECK(std::abs(d_Z(a, m) - s * total) <= 1e-9);
    CHECK(std::abs(d_Z(m, b) - (1.0 - s) * total) <= 1e-9);
  }
  CHECK_THROWS_AS(dZ_geodesic_point(HPoint(0, 1), HPoint(0, 1), 0.5), DomainError);
  CHECK_THROWS_AS(dZ_geodesic_point(HPoint(0, 1), HPoint(0, 2), 1.5), DomainError);
  CHECK_THROWS_AS(dZ_geodesic_point(HPoint(0.5, 0.0), HPoint(0, 2), 0.5), DomainError);
}

TEST_CASE("sampled hyperbolic geodesics are additive in d_Z") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    const HPoint a = random_interior_hpoint(rng);
    const HPoint b = t % 2 ? random_real_hpoint(rng) : random_interior_hpoint(rng);
    const auto arc = sample_hyperbolic_geodesic(a, b, 40);
    REQUIRE(arc.size() == 40);
    CHECK(arc.front() == a);
    CHECK(arc.back() == b);
    std::vector<AnyPoint> pts(arc.begin(), arc.end());
    CHECK(additivity_check(pts, MetricKind::DZ, 1e-9).is_geodesic_within);
  }
  CHECK_THROWS_AS(sample_hyperbolic_geodesic(HPoint(0, 1), HPoint(0, 2), 1), DomainError);
}

TEST_CASE("bent geodesic") {
  const Polyline p = bent_geodesic(0.01, 65);
  CHECK(p.size() == 65);
  CHECK(std::get<HPoint>(p.front()) == HPoint(Complex{10.0, 9.0} / 181.0));
  CHECK(std::get<HPoint>(p.back()) == HPoint(Complex{10.0, 11.0} / 221.0));
  const MoebiusMap rho = bent_geodesic_chart();
  CHECK(std::abs(rho(std::get<HPoint>(p.points()[32]).z()) - Complex{0.01, 10.0}) < 1e-9);
  CHECK(additivity_check(p.points(), MetricKind::DZ).is_geodesic_within);
  CHECK(path_length(p) ==
        doctest::Approx(metric_distance(MetricKind::DZ, p.front(), p.back())).epsilon(1e-12));
  CHECK_THROWS_AS(bent_geodesic(0.0), DomainError);
  CHECK_THROWS_AS(bent_geodesic(-0.1), DomainError);
}

TEST_CASE("boundary crossings on a chart-linear path") {
  const ChartPoint a{0, 0.0, 0.5, 0.0, 0.0}, b{0, 1.0, 1.5, 0.0, 0.0};
  const std::vector<StabPoint> path{chart_to_stab(a), chart_to_stab(b)};
  const auto cross = boundary_crossings(path);
  REQUIRE(cross.size() == 1);
  REQUIRE(cross[0].is_boundary());
  const ChartPoint c = stab_to_chart(cross[0], 0);
  CHECK(c.beta == 1.0);
  CHECK(c.alpha == doctest::Approx(0.5));

  const Polyline straight = chart_linear_path({a, b}, 4);
  const Polyline with = insert_boundary_crossings(straight);
  CHECK(with.size() == straight.size());  // t = 1/2 is already a vertex
  CHECK_FALSE(boundary_crossings(with).empty());

  const Polyline odd = chart_linear_path({a, b}, 3);
  CHECK(insert_boundary_crossings(odd).size() == odd.size() + 1);

  // Staying off the wall.
  const std::vector<StabPoint> inside{chart_to_stab(ChartPoint{0, 0.0, 0.2}),
                                      chart_to_stab(ChartPoint{0, 1.0, 0.8})};
  CHECK(boundary_crossings(inside).empty());
  CHECK_THROWS_AS(chart_linear_path({a}, 4), DomainError);
  CHECK_THROWS_AS(chart_linear_path({a, ChartPoint{1, 0.0, 0.5}}, 4), DomainError);
}

TEST_CASE("every path from the geometric side to the algebraic side meets the wall") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    std::vector<StabPoint> path{counterexample_sigma1()};
    const int extra = 1 + t % 3;
    for (int i = 0; i < extra; ++i)
      path.push_back(chart_to_stab(ChartPoint{0, uniform(rng, -4, 4), uniform(rng, 0.05, 2.5),
                                              uniform(rng, -3, 3), uniform(rng, -1, 1)}));
    path.push_back(counterexample_sigma3());
    CHECK_FALSE(boundary_crossings(path).empty());
  }
}

TEST_CASE("composite path bounds") {
  const QuotientPoint a = QuotientPoint::algebraic(0, 0.0, 1.1);
  const QuotientPoint b = QuotientPoint::algebraic(0, 1.0, 1.3);
  const Polyline same = composite_path(a, b, 1e-3, 33);
  CHECK(path_length(same) == doctest::Approx(0.5).epsilon(1e-12));

  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const QuotientPoint q1 = random_quotient_point(rng, Form::Algebraic);
    const QuotientPoint q2 = random_quotient_point(rng, t % 2 ? Form::Geometric : Form::Boundary);
    const Polyline p = composite_path(q1, q2, 1e-3, 33);
    const double dbar = quotient_distance(q1, q2).d;
    const double len = path_length(p);
    CHECK(dbar <= len + 1e-9);
    CHECK(len <= 2.0 * dbar + 0.05);
  }
  CHECK_THROWS_AS(composite_path(QuotientPoint::geometric(Complex{0, 1}),
                                 QuotientPoint::geometric(Complex{0, 2}), 1e-3, 33),
                  DomainError);
  CHECK_THROWS_AS(composite_path(a, b, 0.0, 33), DomainError);
  CHECK_THROWS_AS(composite_path(a, b, 1e-3, 1), DomainError);
}

TEST_CASE("polyline CSV") {
  const Polyline p({HPoint(0, 1), HPoint(0, 2), HPoint(0, 4)}, MetricKind::DHyp);
  std::istringstream in(polyline_csv(p));
  std::string line;
  std::getline(in, line);
  CHECK(line == "index,param,re,im,cumulative_length");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);

  const Polyline s = chart_linear_path({ChartPoint{0, 0.0, 0.5}, ChartPoint{0, 0.0, 1.5}}, 2);
  std::istringstream in2(polyline_csv(s));
  std::getline(in2, line);
  CHECK(line == "index,param,form,tau_re,tau_im,k,alpha,beta,x,y,cumulative_length");
}
