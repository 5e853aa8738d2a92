#pragma once

// Sampled curves, their lengths, and geodesic checks.
//
// A curve is a polyline: the sum of consecutive distances is a lower bound for
// the length of any continuous curve through the same samples, and it never
// decreases under refinement.

#include <string>
#include <variant>
#include <vector>

#include "stabgeo/coords.hpp"
#include "stabgeo/halfplane.hpp"
#include "stabgeo/kernels.hpp"

namespace stabgeo {

enum class MetricKind { D, DQuotient, DZ, DHyp, DMass, DQuotientMass };

std::string to_string(MetricKind metric);
MetricKind metric_from_string(const std::string& name);

using AnyPoint = std::variant<StabPoint, QuotientPoint, HPoint>;

/// Throws DomainError if the points do not belong to the metric's space.
double metric_distance(MetricKind metric, const AnyPoint& a, const AnyPoint& b);

class Polyline {
 public:
  /// At least two points, one point type, consecutive points distinct.
  Polyline(std::vector<AnyPoint> points, MetricKind metric);

  const std::vector<AnyPoint>& points() const { return points_; }
  MetricKind metric() const { return metric_; }
  std::size_t size() const { return points_.size(); }
  const AnyPoint& front() const { return points_.front(); }
  const AnyPoint& back() const { return points_.back(); }

  /// Copy with p inserted before index i.
  Polyline with_inserted(std::size_t i, const AnyPoint& p) const;

 private:
  std::vector<AnyPoint> points_;
  MetricKind metric_;
};

double path_length(const Polyline& path);

/// Cumulative lengths, starting at 0.
std::vector<double> cumulative_lengths(const Polyline& path);

struct GeodesicReport {
  double additivity_defect = 0.0;
  double tolerance = 0.0;
  bool is_geodesic_within = false;
};

GeodesicReport additivity_check(const std::vector<AnyPoint>& points, MetricKind metric,
                                double tolerance = 1e-9, Exec exec = Exec::Parallel);

struct Reparametrization {
  Polyline curve;
  std::vector<double> params;  // d(p_0, p_i) / d(p_0, p_end)
};

/// Throws DomainError if the samples fail the additivity check.
Reparametrization reparametrize_arclength(const std::vector<AnyPoint>& samples,
                                          MetricKind metric, double tolerance = 1e-9);

/// The point at d_Z-arclength fraction s along the hyperbolic geodesic p1 -> p2.
HPoint dZ_geodesic_point(const HPoint& p1, const HPoint& p2, double s);

/// samples points along the hyperbolic geodesic from a to b (either may be a
/// point of R \ Z).
std::vector<HPoint> sample_hyperbolic_geodesic(const HPoint& a, const HPoint& b, int samples);

/// The map z -> 10 - 1/z.
MoebiusMap bent_geodesic_chart();

/// Pull-back of [9i, eps+10i] u [eps+10i, 11i] under z -> 10 - 1/z, under d_Z.
Polyline bent_geodesic(double eps, int samples = 256);

/// Wall points (beta = 1) met by each segment under linear interpolation in a
/// common X_k chart; Boundary vertices are reported as well.
std::vector<StabPoint> boundary_crossings(const std::vector<StabPoint>& path);
std::vector<AnyPoint> boundary_crossings(const Polyline& path);

/// The same path with every wall crossing inserted as a vertex.
Polyline insert_boundary_crossings(const Polyline& path);

/// Chart-linear path through vertices of one X_k chart, each edge split into
/// `segments` pieces.
Polyline chart_linear_path(const std::vector<ChartPoint>& vertices, int segments,
                           MetricKind metric = MetricKind::D);

/// The upper-bound path from the length-metric comparison:
///   straight beta-segment (beta1 -> 1) + hyperbolic geodesic between the
///   projections + straight beta-segment (1 -> beta2),
/// or the straight (alpha, beta) segment for two algebraic points of one
/// chamber. The closure part is refined until its length moves by < eps.
Polyline composite_path(const QuotientPoint& q1, const QuotientPoint& q2, double eps,
                        int n_samples);

/// One row per sample: index, parameter in [0,1], coordinates, cumulative length.
std::string polyline_csv(const Polyline& path);

}  // namespace stabgeo
