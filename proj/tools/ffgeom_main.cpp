#include <iostream>

#include <CLI11.hpp>

#include "ffgeom/cli.hpp"

int main(int argc, char** argv) {
  using ffgeom::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"Exact finite-plane geometry: area spectra, spanned lines, incidences, character sums"};
  app.set_version_flag("--version", ffgeom::cli::kVersion);
  app.require_subcommand(1);

  bool json_out = false, csv_out = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "Field spec, e.g. 7, 3^2, or \"3^2 modulus=1,0,1\"");
    sub->add_option("--in", cfg.in_path, "Point-set file");
    sub->add_option("--random", cfg.random, "Random point count (or 'auto' = ceil(64 q log2 q))");
    sub->add_flag("--all-points", cfg.all_points, "Use every point of GF(q)^d");
    sub->add_option("--seed", cfg.seed, "Seed for every random choice");
    sub->add_option("--d", cfg.d, "Dimension (default 2)");
    sub->add_option("--pin", cfg.pin, "Pin point, e.g. 0,0");
    sub->add_option("--k", cfg.k, "Richness threshold for L_k");
    sub->add_option("--threshold", cfg.threshold, "Early-exit target (distinct values)");
    sub->add_option("--mode", cfg.mode, "exhaustive | early")->check(CLI::IsMember({"exhaustive", "early"}));
    sub->add_option("--budget", cfg.budget, "Tuple budget for early-exit mode");
    sub->add_option("--workers", cfg.workers, "Worker threads (never changes output)");
    sub->add_flag("--json", json_out, "JSON output (default)");
    sub->add_flag("--csv", csv_out, "CSV output (spectra and line tables only)");
    sub->add_option("--out", cfg.out_path, "Write the report here instead of stdout");
    sub->add_flag("--hypothesis-check", cfg.hypothesis_check, "Refuse to claim verification below the theorem's hypothesis");
  };

  const std::pair<const char*, const char*> commands[] = {
      {"areas", "Triangle-area spectrum V_2(E)"},
      {"pinned", "Pinned spectrum V_2^z(E) (any d with --d)"},
      {"volumes", "Simplex-volume spectrum V_d(E)"},
      {"lines", "Spanned lines with richness"},
      {"vinh", "Incidence bound check"},
      {"beck", "Finite-field Beck pipeline"},
      {"l2", "Dot-product energy bound check"},
      {"theorem1", "Area lower bounds: sets larger than q, and pinned areas at full scale"},
      {"sweep", "Exhaustive or sampled subset sweeps"},
      {"corollary", "Higher-dimensional volume checks"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    const std::string n = name;
    if (n == "vinh") {
      sub->add_flag("--all-lines", cfg.all_lines, "Use every line of the plane");
      sub->add_option("--random-lines", cfg.random_lines, "Random line family size");
    } else if (n == "l2") {
      sub->add_option("--in-g", cfg.in_g_path, "Point-set file for G (default G = F)");
      sub->add_option("--random-g", cfg.random_g, "Random G size");
    } else if (n == "sweep") {
      sub->add_option("--n", cfg.n, "Subset size")->required();
      sub->add_option("--property", cfg.property, "theorem1i | direction_coverage | all_areas");
      sub->add_option("--samples", cfg.samples, "Sample count (0 = exhaustive)");
      sub->add_option("--checkpoint-dir", cfg.checkpoint_dir, "Directory for resumable checkpoints");
    }
    sub->callback([&cfg, n] { cfg.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ffgeom::cli::kInputError;
  }
  if (json_out && csv_out) {
    std::cerr << "error: --json and --csv are exclusive\n";
    return ffgeom::cli::kInputError;
  }
  cfg.format = csv_out ? ffgeom::cli::OutputFormat::Csv : ffgeom::cli::OutputFormat::Json;
  return ffgeom::cli::run(cfg, std::cout, std::cerr);
}
