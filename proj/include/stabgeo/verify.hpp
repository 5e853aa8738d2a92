#pragma once

// Reproducible numerical checks bundled into reports.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "stabgeo/coords.hpp"
#include "stabgeo/halfplane.hpp"
#include "stabgeo/json_io.hpp"

namespace stabgeo {

enum class Relation { LessEq, GreaterEq, Near };

struct Check {
  std::string name;
  Relation relation = Relation::LessEq;
  double value = 0.0;
  double bound = 0.0;
  double tolerance = 0.0;
  bool asserted = true;

  /// Signed slack; negative when the check fails.
  double margin() const;
  bool passed() const { return margin() >= 0.0; }
};

struct Report {
  std::string name;
  std::string claim;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::pair<std::string, double>> tolerances;
  std::vector<std::string> notes;
  std::optional<double> runtime_seconds;

  /// True iff every asserted check holds.
  bool passed() const;
  std::string status() const { return passed() ? "pass" : "fail"; }

  void value(const std::string& key, double v) { values.emplace_back(key, v); }
  void tolerance(const std::string& key, double t) { tolerances.emplace_back(key, t); }
  Check& check(std::string check_name, Relation rel, double v, double bound, double tol,
               bool asserted = true);
};

/// runtime_seconds is emitted only on request so that reports stay reproducible.
Json to_json(const Report& r, bool with_runtime = false);
std::string to_text(const Report& r);

// Random inputs shared by the checks and the tests.
StabPoint random_stab_point(std::mt19937_64& rng, Form form);
StabPoint random_stab_point(std::mt19937_64& rng);  // form drawn uniformly
QuotientPoint random_quotient_point(std::mt19937_64& rng, Form form);
/// Interior point with log-uniform height.
HPoint random_interior_hpoint(std::mt19937_64& rng);
/// Real point at distance >= 0.1 from Z.
HPoint random_real_hpoint(std::mt19937_64& rng);
double uniform(std::mt19937_64& rng, double lo, double hi);

struct CounterexampleConfig {
  int window = 10000;
  int k_min = -50;
  int k_max = 50;
  int grid = 241;
  double tol = 1e-9;
  int paths = 100;
  int segments = 64;
  std::uint64_t seed = 42;
  /// Quotient variant only: start from the boundary point itself.
  bool degenerate = false;
};

/// sigma1 = (1/2 + 10i, 0, 0), sigma2 = (1/2, log(401)/4, 0) on the wall,
/// sigma3 = (k=0, alpha=0, beta=1.1, log(401)/4 - log 2, 0).
StabPoint counterexample_sigma1();
StabPoint counterexample_sigma2();
StabPoint counterexample_sigma3();

Report verify_counterexample(const CounterexampleConfig& config = {});
Report verify_quotient_counterexample(const CounterexampleConfig& config = {});

/// Separation is asserted; additivity is asserted for eps <= the validated range
/// and only reported above it. Throws DomainError unless 0 < eps <= 0.1.
Report verify_nonunique_geodesic(double eps, int samples = 256);
inline constexpr double kNonuniqueAssertedMaxEps = 0.05;

Report verify_length_bound(int samples, std::uint64_t seed);

/// inject_fault replaces d_Z by its square inside the d_Z axiom check.
Report run_property_suite(std::uint64_t seed, int trials, bool inject_fault = false);

}  // namespace stabgeo
