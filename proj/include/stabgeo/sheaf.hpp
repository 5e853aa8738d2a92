#pragma once

// Test objects (line bundles and skyscrapers) and their central charges,
// masses and extremal phases under a stability condition.

#include <string>
#include <vector>

#include "stabgeo/coords.hpp"

namespace stabgeo {

class SheafClass {
 public:
  static SheafClass line_bundle(int n) { return SheafClass(false, n); }
  static SheafClass skyscraper() { return SheafClass(true, 0); }

  bool is_skyscraper() const { return skyscraper_; }
  /// Twist n of O(n); meaningless for the skyscraper.
  int degree_index() const { return n_; }

  int rank() const { return skyscraper_ ? 0 : 1; }
  int degree() const { return skyscraper_ ? 1 : n_; }

  std::string name() const;

  friend bool operator==(const SheafClass&, const SheafClass&) = default;

 private:
  SheafClass(bool sky, int n) : skyscraper_(sky), n_(n) {}
  bool skyscraper_;
  int n_;
};

struct MassPhase {
  double mass = 1.0;
  double phase_max = 0.0;  // phi^+
  double phase_min = 0.0;  // phi^-
};

Complex central_charge(const StabPoint& s, const SheafClass& c);

MassPhase mass_phase(const StabPoint& s, const SheafClass& c);

/// Mass and phases straight from the algebraic-chamber table, for chart data
/// with beta >= 1. Unlike StabPoint it accepts beta == 1 verbatim.
MassPhase mass_phase_algebraic_table(const ChartPoint& p, const SheafClass& c);

/// Mass of a geometric point from its chart coordinates (0 < beta < 1).
double mass_in_geometric_chart(const ChartPoint& p, const SheafClass& c);

/// {O(n) : n_min <= n <= n_max} followed by the skyscraper.
std::vector<SheafClass> enumerate_test_objects(int n_min, int n_max);

}  // namespace stabgeo
