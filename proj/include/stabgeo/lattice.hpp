#pragma once

// Exact suprema and infima over n in Z of
//   f(n) = log|tau1 - n| - log|tau2 - n|          (lattice_log_extrema)
//   h(n) = arg((tau1 - n) / (tau2 - n))            (lattice_arg_extrema)
//
// The real extension of either function is monotone between consecutive
// critical points (roots of a quadratic) and real poles, and tends to 0 at
// +-infinity. The extrema over Z are therefore among the integers adjacent to
// those special points, together with the tail limit 0.

#include <cstdint>
#include <optional>
#include <utility>

#include "stabgeo/coords.hpp"

namespace stabgeo {

struct LatticeExtrema {
  double sup_value = 0.0;
  std::optional<std::int64_t> sup_attained_at;  // empty: tail limit 0
  double inf_value = 0.0;
  std::optional<std::int64_t> inf_attained_at;
};

/// tau1, tau2 in H or R \ Z.
LatticeExtrema lattice_log_extrema(Complex tau1, Complex tau2);

/// tau1, tau2 in H (strictly).
LatticeExtrema lattice_arg_extrema(Complex tau1, Complex tau2);

/// f(n), evaluated without cancellation for large |n|.
double log_ratio_at(Complex tau1, Complex tau2, double n);
/// h(n) in (-pi, pi).
double arg_ratio_at(Complex tau1, Complex tau2, double n);

/// Bound on |f(n)| (and on |h(n)|) for all |n| > window.
/// Infinite when the window does not clear both points.
double lattice_tail_bound(Complex tau1, Complex tau2, long window);

struct SupInfCenter {
  double value = 0.0;
  double lambda_star = 0.0;
};

/// inf over lambda of max(sup|A + lambda|, |lambda|), for sup A >= 0 >= inf A.
SupInfCenter supinf_center(double sup_a, double inf_a);

/// Throws DomainError for tau on the real axis at an integer, or Im tau < 0.
void require_closure_point(Complex tau);

}  // namespace stabgeo
