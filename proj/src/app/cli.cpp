#include "docalc/app/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "docalc/app/config.hpp"
#include "docalc/app/manifest.hpp"
#include "docalc/app/simulate.hpp"
#include "docalc/app/verify.hpp"
#include "docalc/geometry/background.hpp"
#include "docalc/ncalg/render.hpp"

namespace docalc::app {

namespace {

// Flags that mirror config keys. All are read as strings and validated by
// the consumer so that config files and flags share one parser.
struct ValueFlag {
  const char* name;
  const char* help;
};

const ValueFlag kValueFlags[] = {
    {"dim", "dimension of the background (1..9)"},
    {"table", "commutation table for eval"},
    {"k", "diffusion constant, or the chaos constant"},
    {"tau", "time step"},
    {"steps", "number of steps"},
    {"walkers", "number of Brownian walkers"},
    {"seed", "random seed"},
    {"horizon", "checkerboard lattice size a + b"},
    {"out", "output directory (default $DOCALC_OUT, then .)"},
    {"y0", "first chaos start value"},
    {"y1", "second chaos start value"},
    {"n", "chaos delay order"},
    {"initial", "comma separated chaos start window"},
    {"count", "random cases per check"},
    {"graph", "theta, k4, prism, cube, bridged or file:PATH"},
    {"source", "checkerboard source: left, right, both or half"},
    {"levels", "quantum walk grid levels"},
    {"precision", "quantum walk arithmetic: double or quad"},
    {"boundary", "diffusion boundary: periodic or absorbing"},
    {"delta", "coarsest quantum walk grid spacing"},
    {"t_end", "quantum walk end time"},
    {"half_width", "quantum walk domain half width"},
};

struct Flags {
  std::map<std::string, std::string> values;
  bool plot = false;
  bool json = false;
  std::string config;
  std::string manifest;
};

void add_flags(CLI::App* cmd, Flags& f) {
  for (const auto& [name, help] : kValueFlags) cmd->add_option(std::string("--") + name, f.values[name], help);
  cmd->add_flag("--plot", f.plot, "also write SVG plots");
  cmd->add_flag("--json", f.json, "print the report as JSON");
  cmd->add_option("--config", f.config, "key=value file mirroring the flags")->check(CLI::ExistingFile);
}

RunConfig resolve(const CLI::App* cmd, const Flags& f) {
  RunConfig c;
  if (!f.manifest.empty()) {
    std::ifstream in(f.manifest);
    if (!in) throw UsageError("cannot read manifest " + f.manifest);
    nlohmann::json m;
    try {
      m = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("bad manifest: " + std::string(e.what()));
    }
    for (const auto& [k, v] : m.at("config").items()) c.set(k, v.get<std::string>());
  }
  if (!f.config.empty()) c.merge(RunConfig::load(f.config));
  for (const auto& [name, help] : kValueFlags) {
    if (cmd->count(std::string("--") + name) > 0) c.set(name, f.values.at(name));
  }
  if (f.plot) c.set("plot", "true");
  return c;
}

ncalg::CommutationTable eval_table(const std::string& name, unsigned dim) {
  if (name == "free") return ncalg::CommutationTable::free();
  if (name == "flat") return geometry::flat_background(dim).table;
  if (name == "gauge") return geometry::gauge_background(dim).table;
  if (name == "metric") return geometry::metric_background(dim).table;
  if (name == "lorentz") return geometry::lorentz_background(dim).table;
  throw UsageError("unknown table " + name + " (free, flat, gauge, metric, lorentz)");
}

bool explicit_output(const RunConfig& c) {
  const char* env = std::getenv("DOCALC_OUT");
  return c.has("out") || (env && *env);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete ordered calculus toolkit", "docalc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Flags vf, sf, pf, ef;
  std::string suite, job, expr;

  auto* verify = app.add_subcommand("verify", "run a symbolic or exact verification suite");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(verify_suites()));
  add_flags(verify, vf);

  auto* simulate = app.add_subcommand("simulate", "run a numeric or enumerative job and write its artifacts");
  simulate->add_option("job", job, "job name")->required()->check(CLI::IsMember(simulate_jobs()));
  add_flags(simulate, sf);
  simulate->add_option("--manifest", sf.manifest, "rerun with the configuration recorded in a manifest");

  auto* planck = app.add_subcommand("planck", "print Planck units and identity residuals");
  add_flags(planck, pf);

  auto* eval = app.add_subcommand("eval", "normalize an expression under a commutation table");
  eval->add_option("expr", expr, "expression")->required();
  add_flags(eval, ef);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      const RunConfig c = resolve(verify, vf);
      auto r = run_verify(suite, c);
      if (vf.json) out << r.json().dump(2) << '\n';
      else out << r.text();
      if (explicit_output(c)) {
        write_run(output_directory(c), "verify " + suite, c, {{"verify-" + suite + ".json", r.json().dump(2) + "\n"}});
      }
      return r.pass() ? kExitOk : kExitFailed;
    }
    if (simulate->parsed()) {
      const RunConfig c = resolve(simulate, sf);
      auto r = run_simulate(job, c);
      const auto dir = output_directory(c);
      const auto manifest = write_run(dir, "simulate " + job, r.resolved, r.artifacts);
      nlohmann::json summary = r.summary;
      summary["job"] = job;
      summary["ok"] = r.ok;
      summary["manifest"] = manifest.string();
      out << summary.dump(2) << '\n';
      return r.ok ? kExitOk : kExitFailed;
    }
    if (planck->parsed()) {
      const RunConfig c = resolve(planck, pf);
      bool ok = false;
      out << planck_report(c, ok);
      out << (ok ? "PASS" : "FAIL") << " planck identities\n";
      return ok ? kExitOk : kExitFailed;
    }
    if (eval->parsed()) {
      const RunConfig c = resolve(eval, ef);
      const auto dim = c.integer("dim", 3);
      if (dim < 1 || dim > 9) throw UsageError("dim must be between 1 and 9");
      auto table = eval_table(c.text("table", "free"), static_cast<unsigned>(dim));
      ncalg::Expression parsed;
      try {
        parsed = ncalg::parse(expr);
      } catch (const ncalg::ParseError& e) {
        throw UsageError(std::string("cannot parse expression: ") + e.what());
      }
      out << ncalg::render(ncalg::normalize(parsed, table)) << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace docalc::app
