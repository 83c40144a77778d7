// phitile: build golden-ratio tilings, check their identities, write figures.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "phitile/io.hpp"
#include "phitile/render.hpp"
#include "phitile/subdivision.hpp"
#include "phitile/verify.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long echo_bits() {
  const char* env = std::getenv("PHITILE_PRECISION");
  if (env == nullptr || *env == '\0') return phitile::kDefaultEchoBits;
  const long bits = std::strtol(env, nullptr, 10);
  if (bits < 128) throw UsageError("PHITILE_PRECISION must be an integer >= 128");
  return bits;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

void print_report(const phitile::SeriesReport& r, bool json) {
  if (json) {
    std::cout << nlohmann::json(r).dump(2) << '\n';
    return;
  }
  std::cout << "formula   " << phitile::to_string(r.formula) << '\n'
            << "n         " << r.n << '\n'
            << "K         " << r.terms << '\n'
            << "partial   " << r.partial.to_string() << '\n'
            << "rhs       " << r.rhs.to_string() << '\n'
            << "residual  " << r.residual.to_string() << '\n'
            << "float     " << r.float_echo << '\n';
}

struct GridArgs {
  std::string mode;
  int min_exp = 0;
  int max_exp = 0;
  std::string x_parity = "even";
  bool rays = false;
  std::optional<int> divider;
  std::string out;
  std::string json;
};

int run_grid(const GridArgs& a) {
  phitile::GridSpec spec;
  spec.mode = a.mode == "ap" ? phitile::GridMode::ap : phitile::GridMode::ep;
  spec.x_parity = a.x_parity == "even" ? phitile::Parity::even : phitile::Parity::odd;
  spec.min_exp = a.min_exp;
  spec.max_exp = a.max_exp;
  phitile::TileSet tiles;
  try {
    tiles = phitile::tiling::fundamental_tiles(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  phitile::render::GridSceneOptions opts;
  opts.rays = a.rays;
  opts.divider_n = a.divider;
  write_file(a.out, phitile::render::render_svg(phitile::render::grid_scene(tiles, opts)));
  if (!a.json.empty()) write_file(a.json, phitile::tileset_to_json(tiles).dump(2) + "\n");
  std::cout << tiles.tiles.size() << " tiles -> " << a.out << '\n';
  return 0;
}

int run_subdivide(int i, int j, int depth, const std::string& out) {
  if (depth < 0) throw UsageError("--depth must be >= 0");
  const auto parent = phitile::GoldenRect::with_exponents({0, 0}, i, j);
  const auto tiles = phitile::subdiv::subdivide_iter(parent, depth);
  write_file(out, phitile::render::render_svg(phitile::render::subdivision_scene(tiles)));
  std::cout << tiles.tiles.size() << " tiles -> " << out << '\n';
  return 0;
}

int run_series(const std::string& formula, int n, int terms, bool json) {
  if (terms < 1) throw UsageError("--terms must be >= 1");
  const auto r = phitile::series::partial_sum(phitile::formula_from_string(formula), n, terms, echo_bits());
  print_report(r, json);
  return phitile::series::consistent(r) ? 0 : kExitFailed;
}

int run_sequent(int terms) {
  if (terms < 1) throw UsageError("--terms must be >= 1");
  const auto r = phitile::series::sequent_instance(terms, echo_bits());
  print_report(r, true);
  return phitile::series::consistent(r) ? 0 : kExitFailed;
}

int run_pi_cert(int n) {
  const auto cert = phitile::series::pi_quarter_certificate(n, echo_bits());
  std::cout << nlohmann::json(cert).dump(2) << '\n';
  return cert.passed() ? 0 : kExitFailed;
}

int run_rabbits(const std::string& shape, int months, bool verify, const std::string& out, const std::string& json) {
  if (months < 1) throw UsageError("--months must be >= 1");
  const auto t = shape == "triangle" ? phitile::rabbits::layout_triangle(months)
                                     : phitile::rabbits::layout_trapezoid(months);
  write_file(out, phitile::render::render_svg(phitile::render::rabbit_scene(t)));
  if (!json.empty()) write_file(json, nlohmann::json(t).dump(2) + "\n");
  std::cout << t.tiles.size() << " tiles -> " << out << '\n';
  if (!verify) return 0;
  const auto report = phitile::rabbits::verify_tiling(t);
  std::cout << "covered area " << gn_to_float(report.covered_area, echo_bits()).to_string(20) << '\n';
  for (const auto& f : report.failures) std::cout << "FAIL " << f << '\n';
  std::cout << (report.passed() ? "all checks passed" : "verification failed") << '\n';
  return report.passed() ? 0 : kExitFailed;
}

int run_verify_all(int window, int months) {
  if (window < 3) throw UsageError("--window must be >= 3");
  if (months < 1) throw UsageError("--months must be >= 1");
  bool ok = true;
  for (const auto& c : phitile::verify_all({window, months})) {
    std::cout << (c.passed() ? "PASS " : "FAIL ") << c.id << ' ' << c.name << '\n';
    for (const auto& f : c.failures) std::cout << "     " << f << '\n';
    ok = ok && c.passed();
  }
  return ok ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact golden-ratio rectangular tilings"};
  app.require_subcommand(1);

  GridArgs grid;
  auto* grid_cmd = app.add_subcommand("grid", "AP or EP fundamental tiling over an exponent window");
  grid_cmd->add_option("--mode", grid.mode, "ap | ep")->required()->check(CLI::IsMember({"ap", "ep"}));
  grid_cmd->add_option("--min-exp", grid.min_exp)->required();
  grid_cmd->add_option("--max-exp", grid.max_exp)->required();
  grid_cmd->add_option("--x-parity", grid.x_parity, "even | odd")->check(CLI::IsMember({"even", "odd"}));
  grid_cmd->add_flag("--rays", grid.rays, "draw beaded rays");
  grid_cmd->add_option("--divider", grid.divider, "draw the divider anchored at phi^N");
  grid_cmd->add_option("--out", grid.out, "SVG output")->required();
  grid_cmd->add_option("--json", grid.json, "tile set JSON output");

  int sub_i = 0, sub_j = 0, sub_depth = 0;
  std::string sub_out;
  auto* sub_cmd = app.add_subcommand("subdivide", "iterated golden subdivision of a phi^i x phi^j rectangle");
  sub_cmd->add_option("--i", sub_i)->required();
  sub_cmd->add_option("--j", sub_j)->required();
  sub_cmd->add_option("--depth", sub_depth)->required();
  sub_cmd->add_option("--out", sub_out)->required();

  std::string formula;
  int series_n = 0, series_terms = 0;
  bool series_json = false;
  auto* series_cmd = app.add_subcommand("series", "exact partial sum with closed-form residual");
  series_cmd->add_option("--formula", formula, "odd | all | fib | arith")
      ->required()
      ->check(CLI::IsMember({"odd", "all", "fib", "arith"}));
  series_cmd->add_option("--n", series_n)->required();
  series_cmd->add_option("--terms", series_terms)->required();
  series_cmd->add_flag("--json", series_json);

  int sequent_terms = 0;
  auto* sequent_cmd = app.add_subcommand("sequent", "1 phi^-2 + 2 phi^-3 + ... = phi^2");
  sequent_cmd->add_option("--terms", sequent_terms)->required();

  int pi_n = 0;
  auto* pi_cmd = app.add_subcommand("pi-cert", "certificate for pi/4 = arctan(phi^3) - arctan(phi^-1)");
  pi_cmd->add_option("--n", pi_n);

  std::string shape, rabbit_out, rabbit_json;
  int months = 0;
  bool rabbit_verify = false;
  auto* rabbit_cmd = app.add_subcommand("rabbits", "Fibonacci rabbit tilings");
  rabbit_cmd->add_option("--shape", shape, "triangle | trapezoid")
      ->required()
      ->check(CLI::IsMember({"triangle", "trapezoid"}));
  rabbit_cmd->add_option("--months", months)->required();
  rabbit_cmd->add_flag("--verify", rabbit_verify);
  rabbit_cmd->add_option("--out", rabbit_out)->required();
  rabbit_cmd->add_option("--json", rabbit_json);

  int window = 6, verify_months = 12;
  auto* verify_cmd = app.add_subcommand("verify-all", "run the full invariant suite");
  verify_cmd->add_option("--window", window);
  verify_cmd->add_option("--months", verify_months);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*grid_cmd) return run_grid(grid);
    if (*sub_cmd) return run_subdivide(sub_i, sub_j, sub_depth, sub_out);
    if (*series_cmd) return run_series(formula, series_n, series_terms, series_json);
    if (*sequent_cmd) return run_sequent(sequent_terms);
    if (*pi_cmd) return run_pi_cert(pi_n);
    if (*rabbit_cmd) return run_rabbits(shape, months, rabbit_verify, rabbit_out, rabbit_json);
    if (*verify_cmd) return run_verify_all(window, verify_months);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
