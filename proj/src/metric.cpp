#include "stabgeo/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace stabgeo {

namespace {

// One component of the metric as a set A of signed differences (log mass
// ratios, or phase differences in units of pi) plus an offset coming from the
// (x, y) coordinates. The component distance is sup |A + offset| and the
// quotient component is (sup A - inf A) / 2. The tail limit 0 is in A.
struct Terms {
  double sup = 0.0;
  double inf = 0.0;
  double offset = 0.0;
  std::string sup_object;
  std::string inf_object;

  double value() const { return std::max(sup + offset, -(inf + offset)); }
  double half_range() const { return supinf_center(sup, inf).value; }
  // Shift of the second point that centres A + offset around 0.
  double best_shift() const { return offset - supinf_center(sup, inf).lambda_star; }
  const std::string& witness() const {
    return (sup + offset >= -(inf + offset)) ? sup_object : inf_object;
  }
};

std::string lattice_object(const std::optional<std::int64_t>& n) {
  return n ? "O(" + std::to_string(*n) + ")" : std::string("O_pt");
}

std::string line_bundle_name(long n) { return "O(" + std::to_string(n) + ")"; }

Terms mass_terms(const StabPoint& s1, const StabPoint& s2) {
  const StabPoint p1 = project_closure(s1);
  const StabPoint p2 = project_closure(s2);
  const LatticeExtrema ext = lattice_log_extrema(closure_tau(p1), closure_tau(p2));
  return Terms{ext.sup_value, ext.inf_value, p1.x() - p2.x(),
               lattice_object(ext.sup_attained_at), lattice_object(ext.inf_attained_at)};
}

Terms pair_terms(double a, const std::string& a_obj, double b, const std::string& b_obj,
                 double offset) {
  Terms t;
  t.offset = offset;
  if (a >= b) {
    t.sup = a, t.sup_object = a_obj, t.inf = b, t.inf_object = b_obj;
  } else {
    t.sup = b, t.sup_object = b_obj, t.inf = a, t.inf_object = a_obj;
  }
  return t;
}

Terms phase_terms(const StabPoint& s1, const StabPoint& s2) {
  if (s1.is_geometric() && s2.is_geometric()) {
    const auto& g1 = s1.geometric();
    const auto& g2 = s2.geometric();
    const LatticeExtrema ext = lattice_arg_extrema(g1.tau, g2.tau);
    return Terms{ext.sup_value / kPi, ext.inf_value / kPi, g1.y - g2.y,
                 lattice_object(ext.sup_attained_at), lattice_object(ext.inf_attained_at)};
  }
  if (s1.is_geometric() || s2.is_geometric() || s1.chamber() == s2.chamber()) {
    // Common chart: the chamber of the non-geometric point.
    const int k = s1.is_geometric() ? s2.chamber() : s1.chamber();
    const ChartPoint c1 = stab_to_chart(s1, k);
    const ChartPoint c2 = stab_to_chart(s2, k);
    return pair_terms(c1.beta - c2.beta, line_bundle_name(k + 1), 0.0, line_bundle_name(k),
                      c1.y - c2.y);
  }
  const int k1 = s1.chamber();
  const int k2 = s2.chamber();
  const ChartPoint c1 = stab_to_chart(s1, k1);
  const ChartPoint c2 = stab_to_chart(s2, k2);
  if (k1 < k2)
    return pair_terms(c1.beta, line_bundle_name(k1 + 1), 1.0 - c2.beta, line_bundle_name(k1),
                      c1.y - c2.y);
  return pair_terms(c1.beta - 1.0, line_bundle_name(k2), -c2.beta, line_bundle_name(k2 + 1),
                    c1.y - c2.y);
}

DistanceBreakdown assemble(double d_mass, double d_phase, std::string mass_witness,
                           std::string phase_witness) {
  DistanceBreakdown out;
  out.d_mass = d_mass;
  out.d_phase = d_phase;
  out.d = std::max(d_mass, d_phase);
  out.witnesses = {"mass:" + std::move(mass_witness), "phase:" + std::move(phase_witness)};
  return out;
}

double boundary_tau(int k, double alpha) { return k + 1.0 / (1.0 + std::exp(alpha)); }

double boundary_objective(const QuotientPoint& q, int k, double alpha) {
  const double tau = boundary_tau(k, alpha);
  if (std::floor(tau) != k) return std::numeric_limits<double>::infinity();
  return quotient_distance(q, QuotientPoint::boundary(tau)).d;
}

struct BoundaryArgmin {
  double value;
  int k;
  double alpha;
};

BoundaryArgmin search_boundary(const QuotientPoint& q, const BoundarySearch& search) {
  if (search.k_min > search.k_max || search.alpha_grid < 2 ||
      !(search.alpha_min < search.alpha_max))
    throw DomainError("empty boundary search range");
  const double step =
      (search.alpha_max - search.alpha_min) / static_cast<double>(search.alpha_grid - 1);

  std::vector<std::tuple<double, int, int>> grid;
  grid.reserve(static_cast<std::size_t>(search.k_max - search.k_min + 1) * search.alpha_grid);
  for (int k = search.k_min; k <= search.k_max; ++k)
    for (int i = 0; i < search.alpha_grid; ++i)
      grid.emplace_back(boundary_objective(q, k, search.alpha_min + i * step), k, i);
  const auto keep = std::min<std::size_t>(std::max(search.refine_brackets, 1), grid.size());
  std::partial_sort(grid.begin(), grid.begin() + static_cast<long>(keep), grid.end());

  BoundaryArgmin best{std::get<0>(grid[0]), std::get<1>(grid[0]),
                      search.alpha_min + std::get<2>(grid[0]) * step};
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  for (std::size_t b = 0; b < keep; ++b) {
    const int k = std::get<1>(grid[b]);
    const int i = std::get<2>(grid[b]);
    double lo = search.alpha_min + std::max(i - 1, 0) * step;
    double hi = search.alpha_min + std::min(i + 1, search.alpha_grid - 1) * step;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = boundary_objective(q, k, x1);
    double f2 = boundary_objective(q, k, x2);
    for (int it = 0; it < search.refine_iters && hi - lo > 1e-15; ++it) {
      if (f1 <= f2) {
        hi = x2, x2 = x1, f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = boundary_objective(q, k, x1);
      } else {
        lo = x1, x1 = x2, f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = boundary_objective(q, k, x2);
      }
    }
    if (f1 < best.value) best = {f1, k, x1};
    if (f2 < best.value) best = {f2, k, x2};
  }
  return best;
}

}  // namespace

DistanceBreakdown distance(const StabPoint& s1, const StabPoint& s2) {
  const Terms mass = mass_terms(s1, s2);
  const Terms phase = phase_terms(s1, s2);
  return assemble(mass.value(), phase.value(), mass.witness(), phase.witness());
}

DistanceBreakdown quotient_distance(const QuotientPoint& q1, const QuotientPoint& q2) {
  const StabPoint& s1 = q1.representative();
  const StabPoint& s2 = q2.representative();
  const Terms mass = mass_terms(s1, s2);
  const Terms phase = phase_terms(s1, s2);
  return assemble(mass.half_range(), phase.half_range(),
                  mass.sup_object + "/" + mass.inf_object,
                  phase.sup_object + "/" + phase.inf_object);
}

Shift optimal_shift(const StabPoint& s1, const StabPoint& s2) {
  return Shift{mass_terms(s1, s2).best_shift(), phase_terms(s1, s2).best_shift()};
}

DistanceBreakdown brute_force_distance(const StabPoint& s1, const StabPoint& s2, int window,
                                       Exec exec) {
  if (window < 1) throw DomainError("oracle window must be >= 1");
  const ObjectScan scan = scan_objects(s1, s2, window, exec);
  return assemble(scan.mass_abs, scan.phase_abs, scan.mass_witness.name(),
                  scan.phase_witness.name());
}

DistanceBreakdown brute_force_quotient_distance(const QuotientPoint& q1,
                                                const QuotientPoint& q2, int window,
                                                Exec exec) {
  if (window < 1) throw DomainError("oracle window must be >= 1");
  const ObjectScan scan = scan_objects(q1.representative(), q2.representative(), window, exec);
  return assemble(0.5 * (scan.mass_max - scan.mass_min), 0.5 * (scan.phase_max - scan.phase_min),
                  "range", "range");
}

double oracle_tail_bound(const StabPoint& s1, const StabPoint& s2, int window) {
  const Complex t1 = closure_tau(project_closure(s1));
  const Complex t2 = closure_tau(project_closure(s2));
  return lattice_tail_bound(t1, t2, window);
}

BoundaryInfimum boundary_infimum(const StabPoint& s, const BoundarySearch& search) {
  if (s.is_boundary()) throw DomainError("boundary_infimum: point is already on the boundary");
  const BoundaryArgmin best = search_boundary(QuotientPoint::of(s), search);
  const StabPoint b = StabPoint::boundary(boundary_tau(best.k, best.alpha));
  const Shift v = optimal_shift(s, b);
  return BoundaryInfimum{best.value, c_act(b, v.x, v.y)};
}

QuotientBoundaryInfimum boundary_infimum(const QuotientPoint& q, const BoundarySearch& search) {
  if (q.form() == Form::Boundary)
    throw DomainError("boundary_infimum: point is already on the boundary");
  const BoundaryArgmin best = search_boundary(q, search);
  return QuotientBoundaryInfimum{best.value,
                                 QuotientPoint::boundary(boundary_tau(best.k, best.alpha))};
}

}  // namespace stabgeo
