// ucoulomb: scattering and bound states of the PT-symmetric Coulomb
// potential on the U-shaped complex contour.

#include <CLI11.hpp>

#include "ucoulomb/emit.hpp"

int main(int argc, char** argv) {
  using namespace ucoulomb;
  CLI::App app{"PT-symmetric Coulomb scattering on the U-shaped contour"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string grid_text, k_text, s_text, format = "csv", family;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--Z", cfg.params.Z, "Coulomb strength");
    sub->add_option("--L", cfg.params.L, "angular-momentum-like parameter");
    sub->add_option("--eps", cfg.params.eps, "contour width (> 0)");
    sub->add_option("--format", format, "csv or json");
    sub->add_option("--output,-o", cfg.output, "output path, '-' for stdout");
  };

  auto* c_contour = app.add_subcommand("contour", "emit the contour x(s)");
  add_common(c_contour);
  c_contour->add_option("--s", s_text, "s grid min:max:n")->required();

  auto* c_pot = app.add_subcommand("potential", "emit V(x(s))");
  add_common(c_pot);
  c_pot->add_option("--s", s_text, "s grid min:max:n")->required();

  auto* c_scan = app.add_subcommand("scan", "scattering amplitudes vs k");
  add_common(c_scan);
  c_scan->add_option("--k", k_text, "k grid min:max:n")->required();

  auto* c_bs = app.add_subcommand("bound-states", "bound-state spectrum");
  add_common(c_bs);
  c_bs->add_option("--nmax", cfg.n_max, "largest quantum number");
  c_bs->add_option("--family", family, "q+ or q- (default: both)");

  auto* c_verify =
      app.add_subcommand("verify", "closed forms vs ODE-integration oracle");
  add_common(c_verify);
  c_verify->add_option("--k", k_text, "k value or grid min:max:n")->required();
  c_verify->add_option("--tol", cfg.tol, "residual tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (format == "csv") cfg.format = Format::csv;
    else if (format == "json") cfg.format = Format::json;
    else throw invalid_config("--format must be csv or json");
    if (!family.empty()) {
      if (family == "q+") cfg.family = Family::q_plus;
      else if (family == "q-") cfg.family = Family::q_minus;
      else throw invalid_config("--family must be q+ or q-");
    }
    if (c_contour->parsed() || c_pot->parsed()) cfg.grid = parse_grid(s_text);
    if (c_scan->parsed() || c_verify->parsed()) cfg.grid = parse_grid(k_text);
    if (c_contour->parsed()) cfg.command = Command::contour;
    else if (c_pot->parsed()) cfg.command = Command::potential;
    else if (c_scan->parsed()) cfg.command = Command::scan;
    else if (c_bs->parsed()) cfg.command = Command::bound_states;
    else cfg.command = Command::verify;
    if (c_bs->parsed()) cfg.grid.n = 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return ucoulomb::run(cfg);
}
