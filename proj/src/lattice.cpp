#include "stabgeo/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace stabgeo {

namespace {

// Integers beyond this are not exactly representable; candidates out there
// contribute only values within the tail bound of 0.
constexpr double kMaxCandidate = 4503599627370496.0;  // 2^52

// Real roots of a t^2 + b t + c = 0, including the degenerate linear case.
std::vector<double> real_roots(double a, double b, double c) {
  std::vector<double> roots;
  if (a == 0.0) {
    if (b != 0.0) roots.push_back(-c / b);
    return roots;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    roots.push_back(-b / (2.0 * a));  // rounding noise around a double root
    return roots;
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  if (q == 0.0) {
    roots.push_back(0.0);
    return roots;
  }
  roots.push_back(q / a);
  roots.push_back(c / q);
  return roots;
}

std::vector<double> candidate_integers(const std::vector<double>& special) {
  std::vector<double> out;
  for (double p : special) {
    if (!std::isfinite(p) || std::abs(p) > kMaxCandidate) continue;
    const double lo = std::floor(p) - 1.0;
    const double hi = std::ceil(p) + 1.0;
    for (double n = lo; n <= hi; n += 1.0) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class Fn>
LatticeExtrema extremize(const std::vector<double>& candidates, Fn&& value_at) {
  LatticeExtrema ext;
  double best_sup = -std::numeric_limits<double>::infinity();
  double best_inf = std::numeric_limits<double>::infinity();
  double arg_sup = 0.0;
  double arg_inf = 0.0;
  for (double n : candidates) {
    const double v = value_at(n);
    if (v > best_sup) {
      best_sup = v;
      arg_sup = n;
    }
    if (v < best_inf) {
      best_inf = v;
      arg_inf = n;
    }
  }
  if (best_sup >= 0.0) {
    ext.sup_value = best_sup;
    ext.sup_attained_at = static_cast<std::int64_t>(arg_sup);
  }
  if (best_inf <= 0.0) {
    ext.inf_value = best_inf;
    ext.inf_attained_at = static_cast<std::int64_t>(arg_inf);
  }
  return ext;
}

}  // namespace

void require_closure_point(Complex tau) {
  if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag()) || tau.imag() < 0.0)
    throw DomainError("point must lie in the closed upper half-plane");
  if (tau.imag() == 0.0 && std::floor(tau.real()) == tau.real())
    throw DomainError("real point at an integer: some mass vanishes");
}

double log_ratio_at(Complex tau1, Complex tau2, double n) {
  const double a1 = tau1.real(), b1 = tau1.imag();
  const double a2 = tau2.real(), b2 = tau2.imag();
  const double den = (a2 - n) * (a2 - n) + b2 * b2;
  const double diff = (a1 - a2) * (a1 + a2 - 2.0 * n) + (b1 - b2) * (b1 + b2);
  return 0.5 * std::log1p(diff / den);
}

double arg_ratio_at(Complex tau1, Complex tau2, double n) {
  const double a1 = tau1.real(), b1 = tau1.imag();
  const double a2 = tau2.real(), b2 = tau2.imag();
  // (tau1 - n) * conj(tau2 - n)
  const double re = (a1 - n) * (a2 - n) + b1 * b2;
  const double im = b1 * a2 - b2 * a1 + n * (b2 - b1);
  return std::atan2(im, re);
}

LatticeExtrema lattice_log_extrema(Complex tau1, Complex tau2) {
  require_closure_point(tau1);
  require_closure_point(tau2);
  if (tau1 == tau2) return LatticeExtrema{};
  const double a1 = tau1.real(), b1 = tau1.imag();
  const double a2 = tau2.real(), b2 = tau2.imag();
  const double da = a1 - a2;
  std::vector<double> special =
      real_roots(da, -da * (a1 + a2) + (b2 * b2 - b1 * b1),
                 da * a1 * a2 - a1 * b2 * b2 + a2 * b1 * b1);
  special.push_back(a1);
  special.push_back(a2);
  return extremize(candidate_integers(special),
                   [&](double n) { return log_ratio_at(tau1, tau2, n); });
}

LatticeExtrema lattice_arg_extrema(Complex tau1, Complex tau2) {
  if (!(tau1.imag() > 0.0) || !(tau2.imag() > 0.0))
    throw DomainError("phase lattice extrema need interior points");
  if (tau1 == tau2) return LatticeExtrema{};
  const double a1 = tau1.real(), b1 = tau1.imag();
  const double a2 = tau2.real(), b2 = tau2.imag();
  std::vector<double> special =
      real_roots(b1 - b2, -2.0 * (b1 * a2 - b2 * a1),
                 b1 * (a2 * a2 + b2 * b2) - b2 * (a1 * a1 + b1 * b1));
  special.push_back(a1);
  special.push_back(a2);
  return extremize(candidate_integers(special),
                   [&](double n) { return arg_ratio_at(tau1, tau2, n); });
}

double lattice_tail_bound(Complex tau1, Complex tau2, long window) {
  const double gap = std::abs(tau1 - tau2);
  const double clearance =
      static_cast<double>(window) + 1.0 - std::max(std::abs(tau1), std::abs(tau2));
  if (gap == 0.0) return 0.0;
  if (clearance <= gap) return std::numeric_limits<double>::infinity();
  return gap / clearance;
}

SupInfCenter supinf_center(double sup_a, double inf_a) {
  if (!(sup_a >= 0.0) || !(inf_a <= 0.0))
    throw DomainError("supinf_center needs sup >= 0 >= inf");
  return SupInfCenter{0.5 * (sup_a - inf_a), -0.5 * (sup_a + inf_a)};
}

}  // namespace stabgeo
