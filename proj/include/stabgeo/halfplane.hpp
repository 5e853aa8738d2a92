#pragma once

// The hyperbolic metric, the lattice-restricted metric d_Z on H u (R \ Z), and
// the Moebius normalizations used to study their geodesics.

#include <optional>

#include "stabgeo/coords.hpp"

namespace stabgeo {

/// A point of H u (R \ Z).
class HPoint {
 public:
  explicit HPoint(Complex z);
  HPoint(double re, double im) : HPoint(Complex{re, im}) {}

  Complex z() const { return z_; }
  bool is_interior() const { return z_.imag() > 0.0; }

  friend bool operator==(const HPoint&, const HPoint&) = default;

 private:
  Complex z_;
};

/// A point of the Riemann sphere restricted to the closed upper half-plane.
struct ExtendedPoint {
  bool at_infinity = false;
  Complex value{};

  static ExtendedPoint infinity() { return ExtendedPoint{true, {}}; }
  static ExtendedPoint finite(Complex z) { return ExtendedPoint{false, z}; }
};

/// z -> (a z + b) / (c z + d) with ad - bc > 0.
class MoebiusMap {
 public:
  MoebiusMap(double a, double b, double c, double d);
  static MoebiusMap identity() { return MoebiusMap(1.0, 0.0, 0.0, 1.0); }

  ExtendedPoint apply(Complex z) const;
  ExtendedPoint apply(const ExtendedPoint& p) const;
  /// Finite image; throws DomainError at the pole.
  Complex operator()(Complex z) const;

  MoebiusMap inverse() const;
  MoebiusMap then(const MoebiusMap& outer) const;

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  double det() const { return a_ * d_ - b_ * c_; }

 private:
  double a_, b_, c_, d_;
};

/// Endpoints on R u {inf} of the hyperbolic geodesic through z1 != z2, with
/// near_first the one closer to z1. Real inputs are their own endpoints.
struct GeodesicEndpoints {
  ExtendedPoint near_first;
  ExtendedPoint near_second;
};
GeodesicEndpoints geodesic_endpoints(Complex z1, Complex z2);

/// Poincare distance from the endpoint cross-ratio. Interior points only.
double d_hyp(const HPoint& z1, const HPoint& z2);

/// sup over s1, s2 in Z of the log cross-ratio; finite on R \ Z.
double d_Z(const HPoint& p1, const HPoint& p2);

/// rho with rho(z1), rho(z2) on the imaginary axis, Im rho(z1) > Im rho(z2) = 1.
MoebiusMap normalize_to_axis(const HPoint& z1, const HPoint& z2);

/// inf and sup of |rho(s)| over s in Z; an empty sup means infinity.
struct ImageExtrema {
  double inf_abs = 0.0;
  std::optional<double> sup_abs;
};
ImageExtrema lattice_image_extrema(const MoebiusMap& rho);

/// d_Z computed on the normalized picture from the extremes m, M of |rho(Z)|.
double d_Z_via_normalization(const HPoint& z1, const HPoint& z2);

/// Hyperbolic distance from p to the complete geodesic through z1, z2.
double distance_to_geodesic(Complex p, const HPoint& z1, const HPoint& z2);

}  // namespace stabgeo
