#include "gabor/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "gabor/config.hpp"
#include "gabor/error.hpp"
#include "gabor/io.hpp"
#include "gabor/parallel.hpp"
#include "gabor/pipeline.hpp"
#include "gabor/report.hpp"

namespace gabor {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string config;
  std::string out;
  std::string csv_dir;
  bool plot = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  bool print_config = false;
};

RunConfig effective_config(const Options& o) {
  RunConfig cfg;
  if (!o.config.empty()) {
    cfg = load_config(o.config);
  } else {
    cfg.validate();
  }
  if (!o.out.empty()) cfg.out_dir = o.out;
  if (!o.csv_dir.empty()) cfg.csv_dir = o.csv_dir;
  if (o.plot) cfg.plot = true;
  if (o.seed) cfg.seed = *o.seed;
  cfg.threads = resolve_threads(o.threads, cfg.threads);
  return cfg;
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const SweepRun run = run_sweep(cfg);
  const fs::path dir = cfg.out_dir;
  write_text(dir / "sweep.csv", sweep_csv(run));
  write_text(dir / "report.json", dump(emit_report(run)));
  if (cfg.plot) write_text(dir / "sweep.gp", plot_script("sweep.csv"));
  if (!cfg.csv_dir.empty()) {
    write_text(fs::path(cfg.csv_dir) / "sweep.csv", sweep_csv(run));
    write_text(fs::path(cfg.csv_dir) / "bounds.csv", bounds_csv(run.bounds));
    write_text(fs::path(cfg.csv_dir) / "fits.csv", fits_csv(run.fits));
  }
  out << "sweep: " << run.sweep.size() << " radii, largest section N=" << run.sweep.back().size << "\n";
  for (const auto& rb : run.sweep) {
    if (rb.below_floor) {
      out << "numerically linearly dependent at radius " << format_double(rb.radius) << " (a_n below eps*N*b_n)\n";
      break;
    }
  }
  out << "bound comparison (heuristic): sup " << (run.comparison.sup.consistent ? "consistent" : "inconsistent")
      << ", sum " << (run.comparison.sum.consistent ? "consistent" : "inconsistent") << " for weight "
      << make_weight(cfg).name() << "\n";
}

void cmd_gram(const RunConfig& cfg, std::ostream& out) {
  const GramSection G = run_gram(cfg);
  const fs::path dir = cfg.out_dir;
  write_text(dir / "gram.csv", gram_csv(G));
  write_text(dir / "envelope.csv", envelope_csv(envelope_extract(G), cfg.dimension));
  out << "gram-dump: N=" << G.size() << "\n";
}

void cmd_kernel(const RunConfig& cfg, std::ostream& out) {
  const KernelRun run = run_kernel(cfg);
  const fs::path dir = cfg.out_dir;
  write_text(dir / "kernel.json", dump(kernel_json(run)));
  write_text(dir / "kernel_vector.csv", kernel_vector_csv(run));
  write_text(dir / "lemma_check.csv", lemma_csv(run.lemma));
  out << "kernel: N=" << run.size << " rank=" << run.projection.rank_estimate
      << " idempotency_defect=" << format_double(run.projection.idempotency_defect) << "\n";
}

void cmd_fit(const RunConfig& cfg, std::ostream& out) {
  const SweepRun run = run_sweep(cfg);
  write_text(fs::path(cfg.out_dir) / "fit.json", dump(fit_report(run)));
  if (!cfg.csv_dir.empty()) write_text(fs::path(cfg.csv_dir) / "fits.csv", fits_csv(run.fits));
  for (const auto& f : run.fits) {
    out << f.model.name() << ": ";
    if (f.fit) {
      out << "slope " << format_double(f.fit->fit.slope) << " R^2 " << format_double(f.fit->fit.r_squared) << "\n";
    } else {
      out << f.error << "\n";
    }
  }
}

void cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const WeightSpec v = make_weight(cfg);
  const BoundsTable t = compute_bounds(cfg, v);
  const fs::path dir = cfg.out_dir;
  write_text(dir / "bounds.csv", bounds_csv(t));
  write_text(dir / "weight_checks.json", dump(weight_checks_json(run_weight_checks(cfg))));
  out << "bounds: " << t.radii.size() << " radii, relative separation " << t.relative_separation << "\n";
}

}  // namespace

int resolve_threads(std::optional<int> flag, int config_value) {
  if (flag && *flag > 0) return *flag;
  if (const char* env = std::getenv("GABOR_SECTIONS_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<int>(n);
  }
  if (config_value > 0) return config_value;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite sections of Gabor systems: Riesz bounds, Gram spectra and kernel projections"};
  app.require_subcommand(0, 1);
  Options o;
  app.add_option("--config", o.config, "TOML run configuration");
  app.add_option("--out", o.out, "output directory (overrides output.dir)");
  app.add_option("--csv-dir", o.csv_dir, "also mirror tables as CSV into this directory");
  app.add_flag("--plot", o.plot, "write a gnuplot script next to the sweep table");
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_option("--threads", o.threads, "worker count");
  app.add_flag("--print-config", o.print_config, "print the effective configuration and exit");
  const char* names[] = {"sweep", "gram-dump", "kernel", "fit", "bounds", "selftest"};
  const char* help[] = {"A_n, B_n sweep with weight bounds and report", "Gram matrix and envelope as CSV",
                        "contour projection, kernel vector, lemma check", "decay fits of the sweep",
                        "weight bound tables and weight checks", "run the built-in example suite"};
  for (int i = 0; i < 6; ++i) app.add_subcommand(names[i], help[i])->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << Error(ErrorCode::InvalidArgument, e.what(), "argv").machine_line() << "\n";
    return 1;
  }

  std::string command;
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();

  try {
    if (command == "selftest") return run_selftest(out) == 0 ? 0 : 2;
    const RunConfig cfg = effective_config(o);
    if (o.print_config) {
      out << print_config(cfg);
      return 0;
    }
    if (command.empty()) {
      out << app.help();
      return 1;
    }
    set_default_threads(cfg.threads);
    if (command == "sweep") cmd_sweep(cfg, out);
    if (command == "gram-dump") cmd_gram(cfg, out);
    if (command == "kernel") cmd_kernel(cfg, out);
    if (command == "fit") cmd_fit(cfg, out);
    if (command == "bounds") cmd_bounds(cfg, out);
    return 0;
  } catch (const Error& e) {
    err << e.machine_line() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error code=Internal msg=\"" << e.what() << "\"\n";
    return 2;
  }
}

}  // namespace gabor
