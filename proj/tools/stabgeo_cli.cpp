// stabgeo: distances on the stability space of the projective line, and the
// numerical checks of its metric geometry.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "stabgeo/json_io.hpp"
#include "stabgeo/metric.hpp"
#include "stabgeo/paths.hpp"
#include "stabgeo/verify.hpp"

using namespace stabgeo;

namespace {

struct Outputs {
  std::string json_path;
  std::string csv_path;
  bool timing = false;
};

Json parse_argument(const std::string& arg) {
  std::string text = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error&) {
    throw DomainError("not a file or valid JSON: " + arg);
  }
}

HPoint parse_hpoint(const std::string& arg) {
  const auto comma = arg.find(',');
  if (comma != std::string::npos && arg.find('[') == std::string::npos)
    return HPoint(std::stod(arg.substr(0, comma)), std::stod(arg.substr(comma + 1)));
  return hpoint_from_json(parse_argument(arg));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << content;
}

void emit_json(const Outputs& out, const Json& j) {
  if (!out.json_path.empty()) write_file(out.json_path, j.dump(2) + "\n");
}

int emit_reports(const Outputs& out, const std::vector<Report>& reports) {
  bool ok = true;
  Json arr = Json::array();
  for (const Report& r : reports) {
    std::cout << to_text(r);
    arr.push_back(to_json(r, out.timing));
    ok = ok && r.passed();
  }
  emit_json(out, reports.size() == 1 ? arr[0] : arr);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric geometry of the stability space of the projective line"};
  app.require_subcommand(1);
  app.fallthrough();
  Outputs out;
  app.add_option("--json", out.json_path, "Write the result as JSON to this path");
  app.add_option("--csv", out.csv_path, "Write sampled curves as CSV to this path (geodesic)");
  app.add_flag("--timing", out.timing, "Include runtimes in JSON reports");

  std::string p1_arg, p2_arg;
  bool quotient = false;
  int oracle_window = 0;
  auto* dist = app.add_subcommand("dist", "Distance between two stability conditions");
  dist->add_option("p1", p1_arg, "Point as JSON or a JSON file")->required();
  dist->add_option("p2", p2_arg, "Point as JSON or a JSON file")->required();
  dist->add_flag("--quotient", quotient, "Distance between the C-orbits");
  dist->add_option("--oracle-window", oracle_window, "Also run the brute-force oracle over O(-N..N)")
      ->check(CLI::PositiveNumber);

  std::string z1_arg, z2_arg;
  auto* dz = app.add_subcommand("dz", "d_Z (and d_hyp) between two points of H u (R \\ Z)");
  dz->add_option("z1", z1_arg, "[re, im], re,im or a real number")->required();
  dz->add_option("z2", z2_arg, "[re, im], re,im or a real number")->required();

  CounterexampleConfig cfg;
  std::vector<int> k_range;
  bool degenerate = false;
  auto* counter = app.add_subcommand("counterexample", "The not-a-length-space witness");
  counter->add_option("--tol", cfg.tol, "Equality tolerance")->capture_default_str();
  counter->add_option("--k-range", k_range, "Chamber range searched on the wall")->expected(2);
  counter->add_option("--grid", cfg.grid, "Alpha grid points per chamber")->capture_default_str();
  counter->add_option("--window", cfg.window, "Oracle object window")->capture_default_str();
  counter->add_option("--paths", cfg.paths, "Random paths")->capture_default_str();
  counter->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  counter->add_flag("--degenerate", degenerate, "Quotient variant starts on the wall");

  double epsilon = 0.01;
  int geo_samples = 256;
  auto* geodesic = app.add_subcommand("geodesic", "Two distinct d_Z-geodesics with common ends");
  geodesic->add_option("--epsilon", epsilon, "Bend of the second path")->capture_default_str();
  geodesic->add_option("--samples", geo_samples, "Samples per curve")->capture_default_str();

  int lb_samples = 100;
  std::uint64_t lb_seed = 42;
  auto* length = app.add_subcommand("length-bound", "dbar <= L <= 2 dbar for composite paths");
  length->add_option("--samples", lb_samples, "Pairs per case")->capture_default_str();
  length->add_option("--seed", lb_seed, "Random seed")->capture_default_str();

  std::uint64_t suite_seed = 42;
  int trials = 1000;
  bool inject = false;
  auto* suite = app.add_subcommand("suite", "Property checks on random inputs");
  suite->add_option("--seed", suite_seed, "Random seed")->capture_default_str();
  suite->add_option("--trials", trials, "Samples per property")->capture_default_str();
  suite->add_flag("--inject-fault", inject, "Corrupt d_Z to exercise the failure path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dist) {
      const Json j1 = parse_argument(p1_arg), j2 = parse_argument(p2_arg);
      Json result;
      if (quotient) {
        const QuotientPoint q1 = quotient_point_from_json(j1), q2 = quotient_point_from_json(j2);
        const DistanceBreakdown d = quotient_distance(q1, q2);
        result["p1"] = to_json(q1);
        result["p2"] = to_json(q2);
        result["quotient"] = true;
        result["distance"] = to_json(d);
        if (oracle_window > 0)
          result["oracle"] = to_json(brute_force_quotient_distance(q1, q2, oracle_window));
      } else {
        const StabPoint s1 = stab_point_from_json(j1), s2 = stab_point_from_json(j2);
        result["p1"] = to_json(s1);
        result["p2"] = to_json(s2);
        result["quotient"] = false;
        result["distance"] = to_json(distance(s1, s2));
        if (oracle_window > 0) {
          result["oracle"] = to_json(brute_force_distance(s1, s2, oracle_window));
          result["oracle_tail_bound"] = oracle_tail_bound(s1, s2, oracle_window);
        }
      }
      std::cout << result.dump(2) << "\n";
      emit_json(out, result);
      return 0;
    }
    if (*dz) {
      const HPoint a = parse_hpoint(z1_arg), b = parse_hpoint(z2_arg);
      Json result;
      result["z1"] = to_json(a);
      result["z2"] = to_json(b);
      result["d_Z"] = d_Z(a, b);
      if (a.is_interior() && b.is_interior()) {
        result["d_hyp"] = d_hyp(a, b);
        result["d_Z_via_normalization"] = d_Z_via_normalization(a, b);
      }
      std::cout << result.dump(2) << "\n";
      emit_json(out, result);
      return 0;
    }
    if (*counter) {
      if (k_range.size() == 2) {
        cfg.k_min = k_range[0];
        cfg.k_max = k_range[1];
      }
      std::vector<Report> reports{verify_counterexample(cfg)};
      CounterexampleConfig qcfg = cfg;
      qcfg.degenerate = degenerate;
      reports.push_back(verify_quotient_counterexample(qcfg));
      return emit_reports(out, reports);
    }
    if (*geodesic) {
      const Report r = verify_nonunique_geodesic(epsilon, geo_samples);
      if (!out.csv_path.empty()) write_file(out.csv_path, polyline_csv(bent_geodesic(epsilon, geo_samples)));
      return emit_reports(out, {r});
    }
    if (*length) return emit_reports(out, {verify_length_bound(lb_samples, lb_seed)});
    if (*suite) return emit_reports(out, {run_property_suite(suite_seed, trials, inject)});
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
