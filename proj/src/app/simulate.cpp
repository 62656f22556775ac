#include "docalc/app/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "docalc/amplitudes/checkerboard.hpp"
#include "docalc/amplitudes/network.hpp"
#include "docalc/app/svg.hpp"
#include "docalc/walks/physics.hpp"
#include "docalc/walks/quantum.hpp"
#include "docalc/walks/random_walk.hpp"

namespace docalc::app {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Reads parameters and records the value actually used.
class Params {
 public:
  explicit Params(const RunConfig& in) : in_(in) {}

  double real(const std::string& key, double fallback) {
    double v = in_.real(key, fallback);
    used_.set(key, num(v));
    return v;
  }
  std::uint64_t count(const std::string& key, std::uint64_t fallback) {
    auto v = in_.count(key, fallback);
    used_.set(key, std::to_string(v));
    return v;
  }
  std::string text(const std::string& key, const std::string& fallback) {
    auto v = in_.text(key, fallback);
    used_.set(key, v);
    return v;
  }
  bool plot() const { return in_.has("plot") && in_.flag("plot"); }
  RunConfig resolved() const {
    RunConfig r = in_;
    r.merge(used_);
    return r;
  }

 private:
  const RunConfig& in_;
  RunConfig used_;
};

JobResult brownian(Params& p) {
  walks::WalkConfig w;
  w.k = p.real("k", 1.0);
  w.tau = p.real("tau", 1.0);
  w.steps = p.count("steps", 1000);
  w.walkers = p.count("walkers", 10000);
  w.seed = p.count("seed", 1);
  if (w.k <= 0 || w.tau <= 0 || w.steps == 0 || w.walkers == 0) throw UsageError("brownian needs k, tau, steps, walkers > 0");
  auto r = walks::brownian_ensemble(w);
  std::ostringstream csv;
  csv << "t,msd,mean\n";
  for (std::size_t k = 0; k < r.time.size(); ++k) csv << num(r.time[k]) << ',' << num(r.msd[k]) << ',' << num(r.mean[k]) << '\n';
  JobResult out;
  out.artifacts.push_back({"brownian.csv", csv.str()});
  const double rel = std::abs(r.slope - w.k) / w.k;
  out.summary = {{"slope", r.slope}, {"intercept", r.intercept}, {"expected_slope", w.k}, {"relative_error", rel}};
  out.ok = rel < 0.05;
  if (p.plot()) {
    Series fit{"k t", r.time, {}};
    for (double t : r.time) fit.y.push_back(w.k * t);
    out.artifacts.push_back({"brownian.svg", svg_line_plot("Mean squared displacement", {{"MSD", r.time, r.msd}, fit})});
  }
  return out;
}

JobResult diffusion(Params& p) {
  const auto steps = p.count("steps", 20);
  if (steps > 60) throw UsageError("diffusion steps must be <= 60 for exact binomials");
  const std::string boundary = p.text("boundary", "periodic");
  if (boundary != "periodic" && boundary != "absorbing") throw UsageError("boundary must be periodic or absorbing");
  const auto b = boundary == "periodic" ? walks::Boundary::Periodic : walks::Boundary::Absorbing;
  std::vector<Rational> spike(2 * steps + 1, Rational(0));
  spike[steps] = Rational(1);
  auto evolved = walks::diffusion_fd_evolve(spike, steps, b);
  auto closed = walks::binomial_spike(steps);
  std::ostringstream csv;
  csv << "offset,p,binomial\n";
  for (std::size_t k = 0; k < evolved.size(); ++k) {
    csv << static_cast<std::int64_t>(k) - static_cast<std::int64_t>(steps) << ',' << evolved[k].str() << ','
        << closed[k].str() << '\n';
  }
  JobResult out;
  out.artifacts.push_back({"diffusion.csv", csv.str()});
  out.ok = evolved == closed;
  out.summary = {{"steps", steps}, {"matches_binomial", out.ok}};
  return out;
}

JobResult qwalk(Params& p) {
  walks::QuantumStudyConfig q;
  q.k = p.real("k", q.k);
  q.t_end = p.real("t_end", q.t_end);
  q.base_delta = p.real("delta", q.base_delta);
  q.half_width = p.real("half_width", q.half_width);
  q.levels = static_cast<unsigned>(p.count("levels", q.levels));
  const std::string precision = p.text("precision", "quad");
  if (precision != "quad" && precision != "double") throw UsageError("precision must be quad or double");
  q.precision = precision == "quad" ? walks::Precision::Quad : walks::Precision::Double;
  if (q.levels < 2 || q.levels > 6) throw UsageError("levels must be between 2 and 6");
  auto study = walks::quantum_refinement_study(q);
  std::ostringstream csv;
  csv << "level,delta,tau,steps,points,l2_error,norm_drift\n";
  Series err{"L2 error", {}, {}};
  for (std::size_t k = 0; k < study.levels.size(); ++k) {
    const auto& l = study.levels[k];
    csv << k << ',' << num(l.delta) << ',' << num(l.tau) << ',' << l.steps << ',' << l.points << ',' << num(l.l2_error)
        << ',' << num(l.norm_drift) << '\n';
    err.x.push_back(l.delta);
    err.y.push_back(l.l2_error);
  }
  JobResult out;
  out.artifacts.push_back({"qwalk.csv", csv.str()});
  out.ok = study.monotone;
  out.summary = {{"levels", study.levels.size()}, {"monotone", study.monotone}};
  if (p.plot()) out.artifacts.push_back({"qwalk.svg", svg_line_plot("Quantum walk error against grid step", {err}, true)});
  return out;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("not a number list: " + s);
    }
  }
  return v;
}

JobResult chaos(Params& p) {
  walks::ChaosConfig c;
  c.k = p.real("k", 1.0);
  c.n = static_cast<unsigned>(p.count("n", 1));
  c.max_steps = p.count("steps", 100);
  const std::string initial = p.text("initial", "");
  if (!initial.empty()) {
    c.initial = parse_list(initial);
  } else {
    if (c.n != 1) throw UsageError("delay order n > 1 needs initial=y0,...,yn");
    c.initial = {p.real("y0", 1.0), p.real("y1", 3.0)};
  }
  if (c.initial.size() != c.n + 1) throw UsageError("initial window must hold n + 1 values");
  auto orbit = walks::chaos_orbit(c);
  std::ostringstream csv;
  csv << "t,y,residual\n";
  for (std::size_t t = 0; t < orbit.y.size(); ++t) {
    csv << t << ',' << num(orbit.y[t]) << ',';
    if (t > c.n) csv << num(orbit.residuals[t - c.n - 1]);
    csv << '\n';
  }
  JobResult out;
  out.artifacts.push_back({"chaos.csv", csv.str()});
  out.summary = {{"kind", walks::orbit_kind_name(orbit.kind)},
                 {"period", orbit.period},
                 {"emitted", orbit.residuals.size()},
                 {"max_residual", orbit.max_residual},
                 {"last", orbit.y.back()}};
  out.ok = orbit.max_residual < 1e-9;
  if (p.plot()) {
    Series s{"y", {}, orbit.y};
    for (std::size_t t = 0; t < orbit.y.size(); ++t) s.x.push_back(static_cast<double>(t));
    out.artifacts.push_back({"chaos.svg", svg_line_plot("Orbit", {s})});
  }
  return out;
}

JobResult signs(Params& p) {
  walks::SignSeries s;
  s.k = p.real("k", 1.0);
  const auto steps = p.count("steps", 64);
  std::mt19937_64 rng(p.count("seed", 1));
  for (std::uint64_t t = 0; t <= steps; ++t) {
    walks::Sign3 e{};
    for (int& x : e) x = (rng() & 1) ? 1 : -1;
    s.eps.push_back(e);
  }
  auto r = walks::sign_field_series(s);
  std::ostringstream csv;
  csv << "t,eps1,eps2,eps3,b1,b2,b3\n";
  for (std::size_t t = 0; t < r.b.size(); ++t) {
    csv << t;
    for (int x : s.eps[t]) csv << ',' << x;
    for (int x : r.b[t]) csv << ',' << x;
    csv << '\n';
  }
  auto scalar = walks::commuting_scalar_feasible(s.k);
  JobResult out;
  out.artifacts.push_back({"signs.csv", csv.str()});
  out.ok = r.consistent && !scalar.feasible;
  out.summary = {{"consistent", r.consistent}, {"commuting_scalars_feasible", scalar.feasible}, {"reason", scalar.reason}};
  return out;
}

JobResult em(Params& p) {
  const auto n = p.count("count", 100);
  std::mt19937_64 rng(p.count("seed", 1));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto vec = [&] { return walks::Vec3{u(rng), u(rng), u(rng)}; };
  std::ostringstream csv;
  csv << "case,lambda,residual\n";
  double worst = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    walks::Vec3 dx = vec(), e = vec();
    const double proj = walks::dot(e, dx) / walks::dot(dx, dx);
    for (int a = 0; a < 3; ++a) e[a] -= proj * dx[a];
    walks::Vec3 b = walks::cross(dx, e);
    const double scale = u(rng) * 2;
    for (double& x : b) x *= scale == 0 ? 1 : scale;
    auto step = walks::em_lorentz_step(walks::EMState::make(vec(), dx, e, b, 1e-9));
    worst = std::max(worst, step.residual);
    csv << k << ',' << num(step.lambda) << ',' << num(step.residual) << '\n';
  }
  JobResult out;
  out.artifacts.push_back({"em.csv", csv.str()});
  out.ok = worst < 1e-12;
  out.summary = {{"cases", n}, {"max_residual", worst}};
  return out;
}

JobResult checkerboard(Params& p) {
  const auto horizon = p.count("horizon", 24);
  const std::string source = p.text("source", "right");
  amplitudes::Source src;
  if (source == "left") src = {GaussRational(1), GaussRational(0)};
  else if (source == "both") src = {GaussRational(1), GaussRational(1)};
  else if (source == "half") src = {GaussRational(Rational(1, 2)), GaussRational(Rational(0), Rational(1, 3))};
  else if (source != "right") throw UsageError("source must be left, right, both or half");
  if (horizon > amplitudes::kLatticeHorizonCap) throw UsageError("horizon exceeds the lattice cap");
  auto lattice = amplitudes::checkerboard_evolve(src, static_cast<unsigned>(horizon));
  std::ostringstream csv;
  csv << "a,b,re_left,im_left,re_right,im_right\n";
  std::vector<std::vector<double>> heat(horizon + 1, std::vector<double>(horizon + 1, 0.0));
  for (unsigned s = 0; s <= horizon; ++s) {
    for (unsigned a = 0; a <= s; ++a) {
      const unsigned b = s - a;
      const auto& l = lattice.left_numerator(a, b);
      const auto& r = lattice.right_numerator(a, b);
      csv << a << ',' << b << ',' << lattice.re_str(l) << ',' << lattice.im_str(l) << ',' << lattice.re_str(r) << ','
          << lattice.im_str(r) << '\n';
      heat[b][a] = lattice.norm(l) + lattice.norm(r);
    }
  }
  JobResult out;
  out.artifacts.push_back({"lattice.csv", csv.str()});
  // Spot check the recursion against the path sum where enumeration is cheap.
  const unsigned check = std::min<unsigned>(static_cast<unsigned>(horizon), 12);
  for (unsigned a = 0; a <= check; ++a) {
    for (unsigned b = 0; a + b <= check; ++b) {
      out.ok = out.ok && lattice.left(a, b) == amplitudes::checkerboard_path_oracle(src, a, b, amplitudes::Direction::Left) &&
               lattice.right(a, b) == amplitudes::checkerboard_path_oracle(src, a, b, amplitudes::Direction::Right);
    }
  }
  out.summary = {{"horizon", horizon}, {"path_sum_agrees_to", check}};
  if (p.plot()) out.artifacts.push_back({"lattice.svg", svg_heat_map("|psi|^2 on the lightcone lattice", heat)});
  return out;
}

amplitudes::Network named_graph(const std::string& name) {
  if (name == "theta") return amplitudes::theta_graph();
  if (name == "k4") return amplitudes::k4_graph();
  if (name == "prism") return amplitudes::prism_graph();
  if (name == "cube") return amplitudes::cube_graph();
  if (name == "bridged") return amplitudes::bridged_graph();
  throw UsageError("unknown graph " + name + " (theta, k4, prism, cube, bridged or file:<path>)");
}

JobResult penrose(Params& p) {
  const std::string graph = p.text("graph", "theta");
  amplitudes::Network g = [&] {
    if (graph.rfind("file:", 0) == 0) {
      std::ifstream in(graph.substr(5));
      if (!in) throw UsageError("cannot read graph file " + graph.substr(5));
      std::stringstream ss;
      ss << in.rdbuf();
      return amplitudes::Network::parse(ss.str());
    }
    return named_graph(graph);
  }();
  auto r = amplitudes::penrose_count(g);
  auto e = amplitudes::euler_check(g);
  nlohmann::json report = {{"graph", graph},
                           {"vertices", e.vertices},
                           {"edges", e.edges},
                           {"faces", e.faces},
                           {"planar", e.planar},
                           {"value", r.value.str()},
                           {"proper_colorings", r.proper_colorings},
                           {"matches", r.matches}};
  JobResult out;
  out.artifacts.push_back({"penrose.json", report.dump(2) + "\n"});
  out.ok = r.matches;
  out.summary = report;
  return out;
}

using JobFn = std::function<JobResult(Params&)>;

const std::map<std::string, JobFn>& registry() {
  static const std::map<std::string, JobFn> r{
      {"brownian", brownian}, {"diffusion", diffusion}, {"qwalk", qwalk},
      {"chaos", chaos},       {"signs", signs},         {"em", em},
      {"checkerboard", checkerboard}, {"penrose", penrose},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& simulate_jobs() {
  static const std::vector<std::string> names{"brownian", "diffusion", "qwalk",        "chaos",
                                              "signs",    "em",        "checkerboard", "penrose"};
  return names;
}

JobResult run_simulate(const std::string& job, const RunConfig& c) {
  auto it = registry().find(job);
  if (it == registry().end()) throw UsageError("unknown simulate job: " + job);
  Params p(c);
  JobResult r = it->second(p);
  r.resolved = p.resolved();
  return r;
}

std::string planck_report(const RunConfig& c, bool& ok) {
  const auto n = walks::planck_numbers(walks::si::hbar, walks::si::c, walks::si::G);
  std::mt19937_64 rng(c.count("seed", 1));
  std::uniform_real_distribution<double> exponent(-35.0, 5.0);
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    worst = std::max(worst, walks::compton_residual(walks::si::hbar, walks::si::c, std::pow(10.0, exponent(rng))));
  }
  const double jones_ratio = n.jones_mass / n.mass;
  ok = n.residual < 1e-12 && worst < 1e-12 && jones_ratio == 0.5;
  std::ostringstream o;
  o << "M = " << num(n.mass) << " kg\n";
  o << "L = " << num(n.length) << " m\n";
  o << "T = " << num(n.time) << " s\n";
  o << "|L^2/T - hbar/M| / (hbar/M) = " << num(n.residual) << '\n';
  o << "Compton residual, worst of 100 masses = " << num(worst) << '\n';
  o << "Jones mass = " << num(n.jones_mass) << " kg (M/2: " << (jones_ratio == 0.5 ? "yes" : "no") << ")\n";
  return o.str();
}

}  // namespace docalc::app
