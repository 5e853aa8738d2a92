#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "stabgeo/kernels.hpp"
#include "stabgeo/halfplane.hpp"
#include "stabgeo/verify.hpp"

using namespace stabgeo;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("lattice scans: serial and OpenMP agree bit for bit") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const HPoint a = random_interior_hpoint(rng), b = random_interior_hpoint(rng);
    const LatticeScan s = scan_lattice_log(a.z(), b.z(), 20000, Exec::Serial);
    const LatticeScan p = scan_lattice_log(a.z(), b.z(), 20000, Exec::Parallel);
    CHECK(same_bits(s.max_value, p.max_value));
    CHECK(same_bits(s.min_value, p.min_value));
    CHECK(s.argmax == p.argmax);
    CHECK(s.argmin == p.argmin);
    const LatticeScan sa = scan_lattice_arg(a.z(), b.z(), 20000, Exec::Serial);
    const LatticeScan pa = scan_lattice_arg(a.z(), b.z(), 20000, Exec::Parallel);
    CHECK(same_bits(sa.max_value, pa.max_value));
    CHECK(same_bits(sa.min_value, pa.min_value));
    CHECK(sa.argmax == pa.argmax);
  }
}

TEST_CASE("lattice scan values") {
  const LatticeScan s = scan_lattice_log(Complex{0, 1}, Complex{0, 2}, 5, Exec::Serial);
  CHECK(s.argmin == 0);
  CHECK(s.min_value == doctest::Approx(-std::log(2.0)));
  CHECK(s.max_value < 0.0);  // no tail term in a finite scan
}

TEST_CASE("object scans agree") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const StabPoint a = random_stab_point(rng), b = random_stab_point(rng);
    const ObjectScan s = scan_objects(a, b, 5000, Exec::Serial);
    const ObjectScan p = scan_objects(a, b, 5000, Exec::Parallel);
    CHECK(same_bits(s.mass_abs, p.mass_abs));
    CHECK(same_bits(s.phase_abs, p.phase_abs));
    CHECK(same_bits(s.mass_max, p.mass_max));
    CHECK(same_bits(s.mass_min, p.mass_min));
    CHECK(same_bits(s.phase_max, p.phase_max));
    CHECK(same_bits(s.phase_min, p.phase_min));
    CHECK(s.mass_witness == p.mass_witness);
    CHECK(s.phase_witness == p.phase_witness);
  }
}

TEST_CASE("distance matrix and triple defect") {
  std::mt19937_64 rng(6);
  std::vector<HPoint> pts;
  for (int i = 0; i < 60; ++i) pts.push_back(random_interior_hpoint(rng));
  auto dist = [&](std::size_t i, std::size_t j) { return d_hyp(pts[i], pts[j]); };
  const auto ms = distance_matrix(pts.size(), dist, Exec::Serial);
  const auto mp = distance_matrix(pts.size(), dist, Exec::Parallel);
  REQUIRE(ms.size() == pts.size() * pts.size());
  for (std::size_t i = 0; i < ms.size(); ++i) CHECK(same_bits(ms[i], mp[i]));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(ms[i * pts.size() + i] == 0.0);
    for (std::size_t j = 0; j < pts.size(); ++j)
      CHECK(ms[i * pts.size() + j] == ms[j * pts.size() + i]);
  }
  const double ds = max_triple_defect(ms, pts.size(), Exec::Serial);
  const double dp = max_triple_defect(ms, pts.size(), Exec::Parallel);
  CHECK(same_bits(ds, dp));
  CHECK(ds > 0.0);  // random points are not collinear

  // Collinear points on one geodesic have no defect.
  std::vector<HPoint> line;
  for (int i = 0; i < 30; ++i) line.emplace_back(0.0, std::exp(0.2 * i));
  auto ldist = [&](std::size_t i, std::size_t j) { return d_hyp(line[i], line[j]); };
  const auto lm = distance_matrix(line.size(), ldist, Exec::Parallel);
  CHECK(max_triple_defect(lm, line.size(), Exec::Parallel) < 1e-12);
}
