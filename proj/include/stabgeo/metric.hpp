#pragma once

// The canonical metric d = max(d_mass, d_phase) and its C-quotient, evaluated
// in closed form from the chamber case formulas and the lattice solvers.

#include <string>
#include <vector>

#include "stabgeo/coords.hpp"
#include "stabgeo/kernels.hpp"
#include "stabgeo/lattice.hpp"

namespace stabgeo {

struct DistanceBreakdown {
  double d = 0.0;
  double d_mass = 0.0;
  double d_phase = 0.0;
  /// "mass:<object>" / "phase:<object>" for the maximizing terms.
  std::vector<std::string> witnesses;
};

DistanceBreakdown distance(const StabPoint& s1, const StabPoint& s2);

DistanceBreakdown quotient_distance(const QuotientPoint& q1, const QuotientPoint& q2);

struct Shift {
  double x = 0.0;
  double y = 0.0;
};

/// The v minimizing d(s1, c_act(s2, v)); at v the value equals the quotient
/// distance of the two orbits.
Shift optimal_shift(const StabPoint& s1, const StabPoint& s2);

/// Sup over enumerate_test_objects(-window, window) straight from mass_phase.
DistanceBreakdown brute_force_distance(const StabPoint& s1, const StabPoint& s2,
                                       int window, Exec exec = Exec::Parallel);

/// Half-ranges of the same object values.
DistanceBreakdown brute_force_quotient_distance(const QuotientPoint& q1,
                                                const QuotientPoint& q2, int window,
                                                Exec exec = Exec::Parallel);

/// How far the windowed oracle may sit below the exact value.
double oracle_tail_bound(const StabPoint& s1, const StabPoint& s2, int window);

struct BoundarySearch {
  int k_min = -50;
  int k_max = 50;
  double alpha_min = -12.0;
  double alpha_max = 12.0;
  int alpha_grid = 241;
  int refine_iters = 200;
  int refine_brackets = 4;
};

struct BoundaryInfimum {
  double value = 0.0;
  StabPoint minimizer = StabPoint::boundary(0.5);
};

struct QuotientBoundaryInfimum {
  double value = 0.0;
  QuotientPoint minimizer = QuotientPoint::boundary(0.5);
};

/// Upper bound on the distance from s to the wall between the geometric and
/// algebraic chambers, found by grid search over (k, alpha), golden-section
/// refinement in alpha, and the closed-form optimum over (x, y).
BoundaryInfimum boundary_infimum(const StabPoint& s, const BoundarySearch& search = {});
QuotientBoundaryInfimum boundary_infimum(const QuotientPoint& q,
                                         const BoundarySearch& search = {});

}  // namespace stabgeo
