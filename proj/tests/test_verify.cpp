#include <doctest.h>

#include <cmath>
#include <random>

#include "stabgeo/json_io.hpp"
#include "stabgeo/metric.hpp"
#include "stabgeo/verify.hpp"

using namespace stabgeo;

TEST_CASE("check margins") {
  Check le{"le", Relation::LessEq, 1.0, 2.0, 0.5};
  CHECK(le.margin() == 1.5);
  CHECK(le.passed());
  Check ge{"ge", Relation::GreaterEq, 1.0, 2.0, 0.5};
  CHECK(ge.margin() == -0.5);
  CHECK_FALSE(ge.passed());
  Check near{"near", Relation::Near, 1.0, 1.25, 0.5};
  CHECK(near.margin() == 0.25);
  CHECK(near.passed());
}

TEST_CASE("unasserted checks do not fail a report") {
  Report r;
  r.name = "demo";
  r.check("soft", Relation::LessEq, 3.0, 1.0, 0.0, false);
  CHECK(r.passed());
  r.check("hard", Relation::LessEq, 3.0, 1.0, 0.0);
  CHECK_FALSE(r.passed());
  CHECK(r.status() == "fail");
}

TEST_CASE("report JSON leaves out runtime unless asked") {
  Report r;
  r.name = "demo";
  r.seed = 7;
  r.value("x", 1.0);
  r.runtime_seconds = 0.5;
  const Json plain = to_json(r);
  CHECK_FALSE(plain.contains("runtime_seconds"));
  CHECK(plain["check"] == "demo");
  CHECK(plain["seed"] == 7);
  CHECK(to_json(r, true).contains("runtime_seconds"));
}

TEST_CASE("random generators stay in their ranges") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    const HPoint r = random_real_hpoint(rng);
    const double x = r.z().real();
    CHECK(r.z().imag() == 0.0);
    CHECK(std::abs(x - std::round(x)) >= 0.1);
    CHECK(random_interior_hpoint(rng).z().imag() > 0.0);
    CHECK(random_stab_point(rng, Form::Boundary).is_boundary());
    CHECK(random_stab_point(rng, Form::Algebraic).is_algebraic());
    CHECK(random_quotient_point(rng, Form::Geometric).form() == Form::Geometric);
  }
}

TEST_CASE("counterexample points") {
  CHECK(counterexample_sigma1().is_geometric());
  CHECK(counterexample_sigma2().is_boundary());
  CHECK(counterexample_sigma3().is_algebraic());
  const double half = 0.25 * std::log(401.0);
  CHECK(counterexample_sigma2().x() == doctest::Approx(half));
  CHECK(counterexample_sigma3().x() == doctest::Approx(half - std::log(2.0)));
}

TEST_CASE("counterexample report passes with a small path sample") {
  CounterexampleConfig cfg;
  cfg.paths = 8;
  cfg.window = 2000;
  const Report r = verify_counterexample(cfg);
  CHECK(r.passed());
  const Report q = verify_quotient_counterexample(cfg);
  CHECK(q.passed());
  cfg.degenerate = true;
  const Report d = verify_quotient_counterexample(cfg);
  CHECK(d.passed());
  CHECK_FALSE(d.notes.empty());
}

TEST_CASE("non-unique geodesic report") {
  const Report r = verify_nonunique_geodesic(0.01, 128);
  CHECK(r.passed());
  CHECK_THROWS_AS(verify_nonunique_geodesic(0.0), DomainError);
  CHECK_THROWS_AS(verify_nonunique_geodesic(0.2), DomainError);
  // Past the asserted range additivity is only reported.
  const Report wide = verify_nonunique_geodesic(0.08, 128);
  for (const Check& c : wide.checks)
    if (c.name.find("bent") != std::string::npos && c.name.find("additiv") != std::string::npos)
      CHECK_FALSE(c.asserted);
}

TEST_CASE("length bound report") {
  const Report r = verify_length_bound(10, 3);
  CHECK(r.passed());
}

TEST_CASE("property suite passes and catches an injected fault") {
  const Report ok = run_property_suite(42, 40);
  CHECK(ok.passed());
  const Report bad = run_property_suite(42, 40, true);
  CHECK_FALSE(bad.passed());
  // Same seed, same report.
  CHECK(to_json(run_property_suite(42, 40)).dump() == to_json(ok).dump());
}

TEST_CASE("JSON points round trip") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const StabPoint s = random_stab_point(rng);
    CHECK(approx_equal(stab_point_from_json(to_json(s)), s, 0.0));
    const QuotientPoint q = QuotientPoint::of(s);
    CHECK(approx_equal(quotient_point_from_json(to_json(q)), q, 0.0));
  }
  const HPoint h(0.25, 2.0);
  CHECK(hpoint_from_json(to_json(h)) == h);
  CHECK(hpoint_from_json(Json(0.5)) == HPoint(0.5, 0.0));
  CHECK(sheaf_class_from_json(to_json(SheafClass::line_bundle(-2))) == SheafClass::line_bundle(-2));
  CHECK_THROWS_AS(stab_point_from_json(Json::parse(R"({"form":"nope"})")), DomainError);
  CHECK_THROWS_AS(hpoint_from_json(Json(1.0)), DomainError);
}
