// Command-line front end for the split-order library.
//
// Exit codes: 0 success (for `check`: the input is an order), 1 a negative
// answer or failed verification, 2 usage, I/O or parse errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "splitorder/correspondence.hpp"
#include "splitorder/error.hpp"
#include "splitorder/exponent_matrix.hpp"
#include "splitorder/fuzz.hpp"
#include "splitorder/polytope.hpp"
#include "splitorder/serialize.hpp"
#include "splitorder/svg.hpp"

namespace so = splitorder;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

so::ExponentMatrix read_matrix(const std::string& path) {
  try {
    return so::exponent_matrix_from_json(read_json(path));
  } catch (const so::Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

std::string matrix_line(const so::ExponentMatrix& nu) { return so::to_json(nu)["nu"].dump(); }

int cmd_check(const std::string& file) {
  const auto nu = read_matrix(file);
  const bool order = so::is_order(nu);
  const bool feasible = so::has_containing_maximal(nu);
  std::cout << "order: " << (order ? "true" : "false") << '\n';
  std::cout << "reduced: " << (so::is_reduced(nu) ? "true" : "false") << '\n';
  std::cout << "containing_maximal: " << (feasible ? "true" : "false") << '\n';
  if (!order) {
    const auto t = *so::find_violated_triple(nu);
    std::cout << "violated: (" << t.i + 1 << ',' << t.j + 1 << ") via k=" << t.k + 1 << "; nu_" << t.i + 1
              << t.k + 1 << " + nu_" << t.k + 1 << t.j + 1 << " = " << nu(t.i, t.k) << " + " << nu(t.k, t.j)
              << " < " << nu(t.i, t.j) << " = nu_" << t.i + 1 << t.j + 1 << " (path " << t.i + 1 << "-" << t.k + 1
              << "-" << t.j + 1 << ")\n";
    std::cout << "hull: " << (feasible ? matrix_line(so::order_hull(nu)) : std::string("none (negative cycle)"))
              << '\n';
  }
  return order ? 0 : 1;
}

int cmd_hull(const std::string& file, const std::string& out) {
  const auto nu = read_matrix(file);
  if (!so::has_containing_maximal(nu)) {
    std::cerr << "hull: no maximal order contains S (negative cycle)\n";
    return 1;
  }
  emit(so::to_json(so::order_hull(nu)).dump() + "\n", out);
  return 0;
}

int cmd_vertices(const std::string& file, const std::string& out) {
  const auto nu = read_matrix(file);
  const auto pts = so::maximal_orders_containing(nu);
  std::cerr << pts.size() << " vertices\n";
  emit(so::to_json(pts).dump() + "\n", out);
  return 0;
}

int cmd_intersect(const std::string& file, const std::string& out) {
  std::vector<so::ApartmentVertex> vs;
  try {
    vs = so::points_from_json(read_json(file));
  } catch (const so::Error& e) {
    throw UsageError(file + ": " + e.what());
  }
  emit(so::to_json(so::intersect_maximal(vs)).dump() + "\n", out);
  return 0;
}

int cmd_roundtrip(const std::string& file, const std::string& out) {
  const auto nu = read_matrix(file);
  if (!so::has_containing_maximal(nu)) {
    std::cerr << "roundtrip: no maximal order contains S (negative cycle)\n";
    return 1;
  }
  const auto report = so::verify_roundtrip(nu);
  emit(so::to_json(report).dump(2) + "\n", out);
  return report.ok() ? 0 : 1;
}

int cmd_fuzz(const so::FuzzConfig& config) {
  try {
    config.validate();
  } catch (const so::Error& e) {
    throw UsageError(e.what());
  }
  const auto summary = so::run_fuzz(config);
  std::cout << "fuzz: seed=" << config.seed << " trials=" << summary.trials << " n=" << config.min_n << ".."
            << config.max_n << " entries=[" << config.min_entry << "," << config.max_entry
            << "] prime=" << config.prime << '\n';
  for (const auto& [name, count] : summary.checks_run) std::cout << "  " << name << ": " << count << " run\n";
  if (summary.ok()) {
    std::cout << "all invariants hold\n";
    return 0;
  }
  std::cout << summary.failures.size() << " failure(s)\n";
  for (const auto& f : summary.failures) {
    json dump{{"check", f.check}, {"trial", f.trial}, {"detail", f.detail}};
    if (f.counterexample) dump["counterexample"] = so::to_json(*f.counterexample);
    std::cout << dump.dump() << '\n';
  }
  return 1;
}

int cmd_draw(const std::string& file, const std::string& out, double scale) {
  const auto nu = read_matrix(file);
  so::SvgOptions opts;
  opts.scale = scale;
  emit(so::render_apartment_svg(nu, opts), out);
  return 0;
}

int cmd_hijikata(const std::string& file) {
  const auto nu = read_matrix(file);
  std::cout << so::hijikata_normal_form(nu) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split orders in M_n(k) and their convex polytopes in the affine building"};
  app.require_subcommand(1);

  std::string file, out;
  double scale = 48.0;
  so::FuzzConfig fuzz;
  std::size_t max_n = fuzz.max_n;

  auto* check = app.add_subcommand("check", "order / reduced / feasibility report; exit 0 iff order");
  check->add_option("matrix", file, "exponent matrix JSON ('-' for stdin)")->required();
  auto* hull = app.add_subcommand("hull", "min-plus order hull");
  auto* vertices = app.add_subcommand("vertices", "maximal orders (lattice points) containing S");
  auto* intersect = app.add_subcommand("intersect", "exponents of an intersection of maximal orders");
  auto* roundtrip = app.add_subcommand("roundtrip", "nu -> C(nu) -> intersection report");
  auto* draw = app.add_subcommand("draw", "SVG of C(nu) for n = 3");
  auto* hijikata = app.add_subcommand("hijikata", "level of a 2x2 order");
  for (auto* sub : {hull, vertices, roundtrip, draw, hijikata}) {
    sub->add_option("matrix", file, "exponent matrix JSON ('-' for stdin)")->required();
  }
  intersect->add_option("vertices", file, "vertex list JSON ('-' for stdin)")->required();
  for (auto* sub : {hull, vertices, intersect, roundtrip, draw}) {
    sub->add_option("--out", out, "output file (default stdout)");
  }
  draw->add_option("--scale", scale, "pixels per lattice step")->check(CLI::PositiveNumber);

  auto* fz = app.add_subcommand("fuzz", "randomized theorem check of every invariant");
  fz->add_option("--n", max_n, "largest dimension (dimensions 2..n are sampled)");
  fz->add_option("--min", fuzz.min_entry, "smallest exponent entry");
  fz->add_option("--max", fuzz.max_entry, "largest exponent entry");
  fz->add_option("--trials", fuzz.trials, "number of random trials");
  fz->add_option("--seed", fuzz.seed, "64-bit seed");
  fz->add_option("--prime", fuzz.prime, "prime p of the local model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(file);
    if (*hull) return cmd_hull(file, out);
    if (*vertices) return cmd_vertices(file, out);
    if (*intersect) return cmd_intersect(file, out);
    if (*roundtrip) return cmd_roundtrip(file, out);
    if (*draw) return cmd_draw(file, out, scale);
    if (*hijikata) return cmd_hijikata(file);
    if (*fz) {
      fuzz.max_n = max_n;
      return cmd_fuzz(fuzz);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const so::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
