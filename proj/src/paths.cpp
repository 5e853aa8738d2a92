#include "stabgeo/paths.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "stabgeo/metric.hpp"

namespace stabgeo {

namespace {

bool same_point(const AnyPoint& a, const AnyPoint& b) {
  if (a.index() != b.index()) return false;
  if (const auto* s = std::get_if<StabPoint>(&a)) return approx_equal(*s, std::get<StabPoint>(b), 0.0);
  if (const auto* q = std::get_if<QuotientPoint>(&a))
    return approx_equal(*q, std::get<QuotientPoint>(b), 0.0);
  return std::get<HPoint>(a) == std::get<HPoint>(b);
}

template <class T>
const T& expect(const AnyPoint& p, const char* what) {
  const T* v = std::get_if<T>(&p);
  if (!v) throw DomainError(std::string("metric ") + what + " got a point of the wrong space");
  return *v;
}

ChartPoint lerp(const ChartPoint& a, const ChartPoint& b, double t) {
  return ChartPoint{a.k, a.alpha + t * (b.alpha - a.alpha), a.beta + t * (b.beta - a.beta),
                    a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

StabPoint wall_point(const ChartPoint& a, const ChartPoint& b) {
  const double t = (1.0 - a.beta) / (b.beta - a.beta);
  ChartPoint w = lerp(a, b, t);
  w.beta = 1.0;
  return chart_to_stab(w);
}

// Wall points strictly inside the segment a -> b.
std::vector<StabPoint> segment_crossings(const StabPoint& a, const StabPoint& b) {
  if (a.is_boundary() || b.is_boundary()) return {};
  if (a.is_geometric() && b.is_geometric()) return {};
  if (a.is_geometric() || b.is_geometric()) {
    const int k = a.is_geometric() ? b.chamber() : a.chamber();
    return {wall_point(stab_to_chart(a, k), stab_to_chart(b, k))};
  }
  if (a.chamber() == b.chamber()) return {};
  // Cross-chamber: pass through a geometric point written in the first chart.
  const ChartPoint ca = stab_to_chart(a, a.chamber());
  const StabPoint g = chart_to_stab(ChartPoint{ca.k, ca.alpha, 0.5, ca.x, ca.y});
  std::vector<StabPoint> out = segment_crossings(a, g);
  for (const StabPoint& p : segment_crossings(g, b)) out.push_back(p);
  return out;
}

std::vector<StabPoint> stab_points_of(const Polyline& path) {
  std::vector<StabPoint> out;
  out.reserve(path.size());
  for (const AnyPoint& p : path.points()) {
    if (const auto* s = std::get_if<StabPoint>(&p)) {
      out.push_back(*s);
    } else if (const auto* q = std::get_if<QuotientPoint>(&p)) {
      out.push_back(q->representative());
    } else {
      throw DomainError("boundary crossings need stability conditions");
    }
  }
  return out;
}

AnyPoint rewrap(const StabPoint& s, bool quotient) {
  if (quotient) return QuotientPoint::of(s);
  return s;
}

QuotientPoint closure_quotient(const HPoint& p) {
  if (p.is_interior()) return QuotientPoint::geometric(p.z());
  return QuotientPoint::boundary(p.z().real());
}

// beta from `from` to 1 (or 1 to `to`) at fixed alpha in the point's chamber.
std::vector<QuotientPoint> beta_segment(const QuotientPoint& q, int samples, bool towards_wall) {
  const AlgebraicCoords& a = q.representative().algebraic();
  std::vector<QuotientPoint> out;
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / (samples - 1);
    const double beta = towards_wall ? a.beta + t * (1.0 - a.beta) : 1.0 + t * (a.beta - 1.0);
    if (i == 0 && towards_wall) {
      out.push_back(q);
    } else if (i == samples - 1 && !towards_wall) {
      out.push_back(q);
    } else if (beta <= 1.0) {
      out.push_back(project_closure(q));
    } else {
      out.push_back(QuotientPoint::algebraic(a.k, a.alpha, beta));
    }
  }
  return out;
}

void push_distinct(std::vector<AnyPoint>& pts, const AnyPoint& p) {
  if (pts.empty() || !same_point(pts.back(), p)) pts.push_back(p);
}

}  // namespace

std::string to_string(MetricKind metric) {
  switch (metric) {
    case MetricKind::D: return "d";
    case MetricKind::DQuotient: return "dbar";
    case MetricKind::DZ: return "dZ";
    case MetricKind::DHyp: return "dhyp";
    case MetricKind::DMass: return "dmass";
    case MetricKind::DQuotientMass: return "dbar_mass";
  }
  return "?";
}

MetricKind metric_from_string(const std::string& name) {
  for (MetricKind m : {MetricKind::D, MetricKind::DQuotient, MetricKind::DZ, MetricKind::DHyp,
                       MetricKind::DMass, MetricKind::DQuotientMass})
    if (to_string(m) == name) return m;
  throw DomainError("unknown metric: " + name);
}

double metric_distance(MetricKind metric, const AnyPoint& a, const AnyPoint& b) {
  switch (metric) {
    case MetricKind::D:
      return distance(expect<StabPoint>(a, "d"), expect<StabPoint>(b, "d")).d;
    case MetricKind::DMass:
      return distance(expect<StabPoint>(a, "dmass"), expect<StabPoint>(b, "dmass")).d_mass;
    case MetricKind::DQuotient:
      return quotient_distance(expect<QuotientPoint>(a, "dbar"), expect<QuotientPoint>(b, "dbar")).d;
    case MetricKind::DQuotientMass:
      return quotient_distance(expect<QuotientPoint>(a, "dbar_mass"),
                               expect<QuotientPoint>(b, "dbar_mass"))
          .d_mass;
    case MetricKind::DZ:
      return d_Z(expect<HPoint>(a, "dZ"), expect<HPoint>(b, "dZ"));
    case MetricKind::DHyp:
      return d_hyp(expect<HPoint>(a, "dhyp"), expect<HPoint>(b, "dhyp"));
  }
  throw DomainError("unknown metric");
}

Polyline::Polyline(std::vector<AnyPoint> points, MetricKind metric)
    : points_(std::move(points)), metric_(metric) {
  if (points_.size() < 2) throw DomainError("a polyline needs at least two points");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].index() != points_[0].index())
      throw DomainError("polyline mixes points of different spaces");
    if (same_point(points_[i - 1], points_[i]))
      throw DomainError("polyline has equal consecutive points at index " + std::to_string(i));
  }
}

Polyline Polyline::with_inserted(std::size_t i, const AnyPoint& p) const {
  if (i > points_.size()) throw DomainError("insertion index out of range");
  std::vector<AnyPoint> pts = points_;
  pts.insert(pts.begin() + static_cast<long>(i), p);
  return Polyline(std::move(pts), metric_);
}

std::vector<double> cumulative_lengths(const Polyline& path) {
  std::vector<double> out(path.size(), 0.0);
  const auto& pts = path.points();
  for (std::size_t i = 1; i < pts.size(); ++i)
    out[i] = out[i - 1] + metric_distance(path.metric(), pts[i - 1], pts[i]);
  return out;
}

double path_length(const Polyline& path) { return cumulative_lengths(path).back(); }

GeodesicReport additivity_check(const std::vector<AnyPoint>& points, MetricKind metric,
                                double tolerance, Exec exec) {
  GeodesicReport out;
  out.tolerance = tolerance;
  const std::size_t n = points.size();
  const std::vector<double> m = distance_matrix(
      n, [&](std::size_t i, std::size_t j) { return metric_distance(metric, points[i], points[j]); },
      exec);
  out.additivity_defect = max_triple_defect(m, n, exec);
  out.is_geodesic_within = out.additivity_defect <= tolerance;
  return out;
}

Reparametrization reparametrize_arclength(const std::vector<AnyPoint>& samples,
                                          MetricKind metric, double tolerance) {
  Polyline curve(samples, metric);
  if (samples.size() > 2) {
    const GeodesicReport rep = additivity_check(samples, metric, tolerance);
    if (!rep.is_geodesic_within)
      throw DomainError("samples are not geodesic: additivity defect " +
                        std::to_string(rep.additivity_defect));
  }
  const double total = metric_distance(metric, samples.front(), samples.back());
  if (!(total > 0.0)) throw DomainError("endpoints at distance zero");
  std::vector<double> params(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    params[i] = metric_distance(metric, samples.front(), samples[i]) / total;
    if (i > 0 && !(params[i] > params[i - 1]))
      throw DomainError("cumulative distance is not strictly increasing");
  }
  params.back() = 1.0;
  return Reparametrization{std::move(curve), std::move(params)};
}

HPoint dZ_geodesic_point(const HPoint& p1, const HPoint& p2, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("geodesic parameter must lie in [0, 1]");
  if (p1 == p2) throw DomainError("dZ_geodesic_point needs distinct points");
  if (s == 0.0) return p1;
  if (s == 1.0) return p2;
  const MoebiusMap rho = normalize_to_axis(p1, p2);
  const MoebiusMap back = rho.inverse();
  const double log_top = std::log(rho(p1.z()).imag());
  auto at = [&](double u) { return HPoint(back(Complex{0.0, std::exp((1.0 - u) * log_top)})); };
  const double target = s * d_Z(p1, p2);
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (d_Z(p1, at(mid)) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return at(0.5 * (lo + hi));
}

std::vector<HPoint> sample_hyperbolic_geodesic(const HPoint& a, const HPoint& b, int samples) {
  if (samples < 2) throw DomainError("need at least two samples");
  if (a == b) throw DomainError("geodesic between equal points");
  const Complex za = a.z(), zb = b.z();
  if (!a.is_interior() && !b.is_interior() && za.real() == zb.real())
    throw DomainError("geodesic between equal points");
  std::vector<HPoint> out;
  out.reserve(static_cast<std::size_t>(samples));
  out.push_back(a);
  const bool both_interior = a.is_interior() && b.is_interior();
  for (int i = 1; i < samples - 1; ++i) {
    const double t = static_cast<double>(i) / (samples - 1);
    Complex z;
    if (za.real() == zb.real()) {
      const double y = both_interior
                           ? std::exp((1.0 - t) * std::log(za.imag()) + t * std::log(zb.imag()))
                           : za.imag() + t * (zb.imag() - za.imag());
      z = Complex{za.real(), y};
    } else {
      const double c = (std::norm(zb) - std::norm(za)) / (2.0 * (zb.real() - za.real()));
      const double r = std::abs(za - c);
      const double ta = std::arg(za - c), tb = std::arg(zb - c);
      double theta;
      if (both_interior) {
        // Uniform in hyperbolic arclength: log tan(theta / 2) is affine.
        const double ua = std::log(std::tan(0.5 * ta)), ub = std::log(std::tan(0.5 * tb));
        theta = 2.0 * std::atan(std::exp((1.0 - t) * ua + t * ub));
      } else {
        theta = (1.0 - t) * ta + t * tb;
      }
      z = Complex{c + r * std::cos(theta), r * std::sin(theta)};
    }
    out.emplace_back(z);
  }
  out.push_back(b);
  return out;
}

MoebiusMap bent_geodesic_chart() { return MoebiusMap(10.0, -1.0, 1.0, 0.0); }

Polyline bent_geodesic(double eps, int samples) {
  if (!(eps > 0.0)) throw DomainError("bent_geodesic needs eps > 0");
  if (samples < 3) throw DomainError("bent_geodesic needs at least three samples");
  const MoebiusMap back = bent_geodesic_chart().inverse();
  const Complex start{0.0, 9.0}, vertex{eps, 10.0}, end{0.0, 11.0};
  const int first = samples / 2;
  const int second = samples - 1 - first;
  std::vector<AnyPoint> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  pts.emplace_back(HPoint(Complex{10.0, 9.0} / 181.0));
  for (int i = 1; i <= first; ++i)
    pts.emplace_back(HPoint(back(start + (static_cast<double>(i) / first) * (vertex - start))));
  for (int j = 1; j < second; ++j)
    pts.emplace_back(HPoint(back(vertex + (static_cast<double>(j) / second) * (end - vertex))));
  pts.emplace_back(HPoint(Complex{10.0, 11.0} / 221.0));
  return Polyline(std::move(pts), MetricKind::DZ);
}

std::vector<StabPoint> boundary_crossings(const std::vector<StabPoint>& path) {
  std::vector<StabPoint> out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i].is_boundary()) {
      out.push_back(path[i]);
      continue;
    }
    if (i + 1 < path.size())
      for (const StabPoint& c : segment_crossings(path[i], path[i + 1])) out.push_back(c);
  }
  return out;
}

std::vector<AnyPoint> boundary_crossings(const Polyline& path) {
  const bool quotient = std::holds_alternative<QuotientPoint>(path.front());
  std::vector<AnyPoint> out;
  for (const StabPoint& s : boundary_crossings(stab_points_of(path))) out.push_back(rewrap(s, quotient));
  return out;
}

Polyline insert_boundary_crossings(const Polyline& path) {
  const bool quotient = std::holds_alternative<QuotientPoint>(path.front());
  const std::vector<StabPoint> pts = stab_points_of(path);
  std::vector<AnyPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    push_distinct(out, path.points()[i]);
    if (i + 1 < pts.size())
      for (const StabPoint& c : segment_crossings(pts[i], pts[i + 1]))
        push_distinct(out, rewrap(c, quotient));
  }
  return Polyline(std::move(out), path.metric());
}

Polyline chart_linear_path(const std::vector<ChartPoint>& vertices, int segments,
                           MetricKind metric) {
  if (vertices.size() < 2) throw DomainError("chart path needs at least two vertices");
  if (segments < 1) throw DomainError("chart path needs at least one segment per edge");
  const bool quotient = metric == MetricKind::DQuotient || metric == MetricKind::DQuotientMass;
  std::vector<AnyPoint> pts;
  for (std::size_t v = 0; v + 1 < vertices.size(); ++v) {
    if (vertices[v].k != vertices[0].k || vertices[v + 1].k != vertices[0].k)
      throw DomainError("chart path vertices must share one chart");
    for (int i = 0; i < segments; ++i)
      push_distinct(pts, rewrap(chart_to_stab(lerp(vertices[v], vertices[v + 1],
                                                   static_cast<double>(i) / segments)),
                                quotient));
  }
  push_distinct(pts, rewrap(chart_to_stab(vertices.back()), quotient));
  return Polyline(std::move(pts), metric);
}

Polyline composite_path(const QuotientPoint& q1, const QuotientPoint& q2, double eps,
                        int n_samples) {
  if (!(eps > 0.0)) throw DomainError("composite_path needs eps > 0");
  if (n_samples < 2) throw DomainError("composite_path needs at least two samples");
  if (q1.form() == Form::Geometric && q2.form() == Form::Geometric)
    throw DomainError("composite_path needs a non-geometric endpoint; use dZ_geodesic_point");

  const int straight = std::max(2, n_samples / 8);
  std::vector<AnyPoint> head, tail;

  if (q1.form() == Form::Algebraic && q2.form() == Form::Algebraic &&
      q1.representative().chamber() == q2.representative().chamber()) {
    const AlgebraicCoords& a = q1.representative().algebraic();
    const AlgebraicCoords& b = q2.representative().algebraic();
    std::vector<AnyPoint> pts;
    for (int i = 0; i < n_samples; ++i) {
      const double t = static_cast<double>(i) / (n_samples - 1);
      push_distinct(pts, QuotientPoint::algebraic(a.k, a.alpha + t * (b.alpha - a.alpha),
                                                  a.beta + t * (b.beta - a.beta)));
    }
    if (pts.size() < 2) pts.push_back(q2);
    return Polyline(std::move(pts), MetricKind::DQuotient);
  }

  if (q1.form() == Form::Algebraic)
    for (const QuotientPoint& q : beta_segment(q1, straight, true)) push_distinct(head, q);
  if (q2.form() == Form::Algebraic)
    for (const QuotientPoint& q : beta_segment(q2, straight, false)) push_distinct(tail, q);

  const QuotientPoint p1 = project_closure(q1), p2 = project_closure(q2);
  const HPoint h1(closure_tau(p1.representative()));
  const HPoint h2(closure_tau(p2.representative()));

  auto assemble = [&](int samples) {
    std::vector<AnyPoint> pts = head;
    if (h1 == h2) {
      push_distinct(pts, p1);
    } else {
      const std::vector<HPoint> arc = sample_hyperbolic_geodesic(h1, h2, samples);
      push_distinct(pts, p1);
      for (std::size_t i = 1; i + 1 < arc.size(); ++i) push_distinct(pts, closure_quotient(arc[i]));
      push_distinct(pts, p2);
    }
    for (const AnyPoint& p : tail) push_distinct(pts, p);
    return Polyline(std::move(pts), MetricKind::DQuotient);
  };

  int samples = n_samples;
  Polyline path = assemble(samples);
  if (h1 == h2) return path;
  double length = path_length(path);
  for (int round = 0; round < 6; ++round) {
    Polyline finer = assemble(2 * samples - 1);
    const double finer_length = path_length(finer);
    samples = 2 * samples - 1;
    path = std::move(finer);
    if (std::abs(finer_length - length) < eps) break;
    length = finer_length;
  }
  return path;
}

std::string polyline_csv(const Polyline& path) {
  const std::vector<double> cum = cumulative_lengths(path);
  const double total = cum.back();
  std::ostringstream os;
  os << std::setprecision(17);
  const bool hpoints = std::holds_alternative<HPoint>(path.front());
  os << (hpoints ? "index,param,re,im,cumulative_length\n"
                 : "index,param,form,tau_re,tau_im,k,alpha,beta,x,y,cumulative_length\n");
  const std::size_t n = path.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double param =
        total > 0.0 ? cum[i] / total : static_cast<double>(i) / static_cast<double>(n - 1);
    os << i << ',' << param << ',';
    const AnyPoint& p = path.points()[i];
    if (const auto* h = std::get_if<HPoint>(&p)) {
      os << h->z().real() << ',' << h->z().imag();
    } else {
      const StabPoint& s = std::holds_alternative<StabPoint>(p)
                               ? std::get<StabPoint>(p)
                               : std::get<QuotientPoint>(p).representative();
      os << to_string(s.form()) << ',';
      if (s.is_geometric()) {
        os << s.geometric().tau.real() << ',' << s.geometric().tau.imag() << ",,,,";
      } else if (s.is_boundary()) {
        os << s.boundary().tau << ",0,,,,";
      } else {
        const AlgebraicCoords& a = s.algebraic();
        os << ",," << a.k << ',' << a.alpha << ',' << a.beta << ',';
      }
      os << s.x() << ',' << s.y();
    }
    os << ',' << cum[i] << '\n';
  }
  return os.str();
}

}  // namespace stabgeo
