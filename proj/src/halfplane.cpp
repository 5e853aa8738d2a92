#include "stabgeo/halfplane.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "stabgeo/lattice.hpp"

namespace stabgeo {

HPoint::HPoint(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || z.imag() < 0.0)
    throw DomainError("HPoint must lie in the closed upper half-plane");
  if (z.imag() == 0.0 && std::floor(z.real()) == z.real())
    throw DomainError("HPoint on the real axis must avoid the integers");
}

MoebiusMap::MoebiusMap(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  if (!(det() > 0.0)) throw DomainError("Moebius map needs positive determinant");
}

ExtendedPoint MoebiusMap::apply(Complex z) const {
  const Complex den = c_ * z + d_;
  if (den == 0.0) return ExtendedPoint::infinity();
  return ExtendedPoint::finite((a_ * z + b_) / den);
}

ExtendedPoint MoebiusMap::apply(const ExtendedPoint& p) const {
  if (!p.at_infinity) return apply(p.value);
  if (c_ == 0.0) return ExtendedPoint::infinity();
  return ExtendedPoint::finite(Complex{a_ / c_, 0.0});
}

Complex MoebiusMap::operator()(Complex z) const {
  const ExtendedPoint p = apply(z);
  if (p.at_infinity) throw DomainError("Moebius map evaluated at its pole");
  return p.value;
}

MoebiusMap MoebiusMap::inverse() const { return MoebiusMap(d_, -b_, -c_, a_); }

MoebiusMap MoebiusMap::then(const MoebiusMap& o) const {
  return MoebiusMap(o.a_ * a_ + o.b_ * c_, o.a_ * b_ + o.b_ * d_, o.c_ * a_ + o.d_ * c_,
                    o.c_ * b_ + o.d_ * d_);
}

GeodesicEndpoints geodesic_endpoints(Complex z1, Complex z2) {
  if (z1 == z2) throw DomainError("geodesic through a single point is not unique");
  if (z1.imag() == 0.0 && z2.imag() == 0.0)
    return {ExtendedPoint::finite(z1), ExtendedPoint::finite(z2)};
  const double x1 = z1.real(), x2 = z2.real();
  if (x1 == x2) {
    const ExtendedPoint foot = ExtendedPoint::finite(Complex{x1, 0.0});
    if (z1.imag() > z2.imag()) return {ExtendedPoint::infinity(), foot};
    return {foot, ExtendedPoint::infinity()};
  }
  const double c = (std::norm(z2) - std::norm(z1)) / (2.0 * (x2 - x1));
  const double r = std::abs(z1 - c);
  // Roots of t^2 - 2ct + (2c x1 - |z1|^2); take the large one first for stability.
  const double big = c + std::copysign(r, c);
  const double product = 2.0 * c * x1 - std::norm(z1);
  const double small = (big != 0.0) ? product / big : c - r;
  const double plus = (c >= 0.0) ? big : small;   // c + r
  const double minus = (c >= 0.0) ? small : big;  // c - r
  // Along the semicircle the angle from the centre decreases towards c + r.
  const bool first_nearer_minus = std::arg(z1 - c) > std::arg(z2 - c);
  const ExtendedPoint at_plus = ExtendedPoint::finite(Complex{plus, 0.0});
  const ExtendedPoint at_minus = ExtendedPoint::finite(Complex{minus, 0.0});
  return first_nearer_minus ? GeodesicEndpoints{at_minus, at_plus}
                            : GeodesicEndpoints{at_plus, at_minus};
}

double d_hyp(const HPoint& p1, const HPoint& p2) {
  if (!p1.is_interior() || !p2.is_interior())
    throw DomainError("d_hyp is infinite at boundary points");
  if (p1 == p2) return 0.0;
  const Complex z1 = p1.z(), z2 = p2.z();
  const GeodesicEndpoints ends = geodesic_endpoints(z1, z2);
  // log(|z1 - t2| |z2 - t1| / (|z2 - t2| |z1 - t1|)); factors at infinity cancel.
  double ratio = 1.0;
  if (!ends.near_second.at_infinity)
    ratio *= std::abs(z1 - ends.near_second.value) / std::abs(z2 - ends.near_second.value);
  if (!ends.near_first.at_infinity)
    ratio *= std::abs(z2 - ends.near_first.value) / std::abs(z1 - ends.near_first.value);
  return std::log(ratio);
}

double d_Z(const HPoint& p1, const HPoint& p2) {
  const LatticeExtrema ext = lattice_log_extrema(p1.z(), p2.z());
  return ext.sup_value - ext.inf_value;
}

MoebiusMap normalize_to_axis(const HPoint& p1, const HPoint& p2) {
  if (!p1.is_interior() || !p2.is_interior())
    throw DomainError("normalize_to_axis needs interior points");
  if (p1 == p2) throw DomainError("normalize_to_axis needs distinct points");
  const GeodesicEndpoints ends = geodesic_endpoints(p1.z(), p2.z());
  // Send the endpoint near z1 to infinity and the one near z2 to 0.
  MoebiusMap rho = MoebiusMap::identity();
  if (ends.near_first.at_infinity) {
    rho = MoebiusMap(1.0, -ends.near_second.value.real(), 0.0, 1.0);
  } else if (ends.near_second.at_infinity) {
    rho = MoebiusMap(0.0, -1.0, 1.0, -ends.near_first.value.real());
  } else {
    const double t1 = ends.near_first.value.real();
    const double t2 = ends.near_second.value.real();
    const double s = (t2 > t1) ? 1.0 : -1.0;
    rho = MoebiusMap(s, -s * t2, 1.0, -t1);
  }
  const double scale = 1.0 / rho(p2.z()).imag();
  return MoebiusMap(scale * rho.a(), scale * rho.b(), rho.c(), rho.d());
}

ImageExtrema lattice_image_extrema(const MoebiusMap& rho) {
  std::vector<double> special;
  if (rho.c() != 0.0) special.push_back(-rho.d() / rho.c());
  if (rho.a() != 0.0) special.push_back(-rho.b() / rho.a());

  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  bool hits_infinity = (rho.c() == 0.0);  // |rho| -> infinity along Z
  if (rho.c() != 0.0) {
    const double tail = std::abs(rho.a() / rho.c());
    lo = std::min(lo, tail);
    hi = std::max(hi, tail);
  }
  for (double p : special) {
    for (double s = std::floor(p) - 1.0; s <= std::ceil(p) + 1.0; s += 1.0) {
      const ExtendedPoint img = rho.apply(Complex{s, 0.0});
      if (img.at_infinity) {
        hits_infinity = true;
        continue;
      }
      const double v = std::abs(img.value.real());
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  ImageExtrema out;
  out.inf_abs = lo;
  if (!hits_infinity) out.sup_abs = hi;
  return out;
}

double d_Z_via_normalization(const HPoint& p1, const HPoint& p2) {
  if (p1 == p2) return 0.0;
  const MoebiusMap rho = normalize_to_axis(p1, p2);
  const double y1 = rho(p1.z()).imag();
  const double y2 = rho(p2.z()).imag();
  const ImageExtrema ext = lattice_image_extrema(rho);
  const double m = ext.inf_abs;
  double value = 0.5 * std::log((y1 * y1 + m * m) / (y2 * y2 + m * m));
  if (ext.sup_abs) {
    const double big = *ext.sup_abs;
    value -= 0.5 * std::log((y1 * y1 + big * big) / (y2 * y2 + big * big));
  }
  return value;
}

double distance_to_geodesic(Complex p, const HPoint& z1, const HPoint& z2) {
  if (!(p.imag() > 0.0)) throw DomainError("distance_to_geodesic needs an interior point");
  const Complex w = normalize_to_axis(z1, z2)(p);
  return std::asinh(std::abs(w.real()) / w.imag());
}

}  // namespace stabgeo
