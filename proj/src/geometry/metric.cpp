#include "docalc/geometry/metric.hpp"

#include <cmath>
#include <string>

namespace docalc::geometry {
namespace {

std::vector<std::string> split_entries(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  bool comment = false;
  auto flush = [&](std::size_t end) {
    std::string tok(text.substr(start, end - start));
    auto b = tok.find_first_not_of(" \t\r");
    if (!comment && b != std::string::npos) {
      auto e = tok.find_last_not_of(" \t\r");
      out.push_back(tok.substr(b, e - b + 1));
    }
  };
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k == text.size() || text[k] == '\n' || text[k] == ',') {
      flush(k);
      if (k == text.size() || text[k] == '\n') comment = false;
      start = k + 1;
      continue;
    }
    if (text[k] == '#' && text.substr(start, k - start).find_first_not_of(" \t") == std::string_view::npos) {
      comment = true;
    }
  }
  return out;
}

}  // namespace

MetricField MetricField::from_polynomials(std::vector<std::vector<Poly>> entries) {
  const std::size_t n = entries.size();
  if (n == 0) throw std::invalid_argument("metric needs at least one coordinate");
  for (const auto& row : entries) {
    if (row.size() != n) throw std::invalid_argument("metric entries must form a square matrix");
    for (const auto& p : row) {
      if (p.nvars() != n) throw std::invalid_argument("metric entries must be polynomials in x1..xn");
    }
  }
  MetricField m;
  m.n_ = static_cast<unsigned>(n);
  m.poly_ = std::move(entries);
  return m;
}

MetricField MetricField::from_function(unsigned n, Function g, Partials partials, double h) {
  if (n == 0) throw std::invalid_argument("metric needs at least one coordinate");
  if (!g) throw std::invalid_argument("metric function is empty");
  if (!(h > 0)) throw std::invalid_argument("finite-difference step must be positive");
  MetricField m;
  m.n_ = n;
  m.fn_ = std::move(g);
  m.partials_ = std::move(partials);
  m.h_ = h;
  return m;
}

MetricField MetricField::parse(std::string_view text) {
  auto tokens = split_entries(text);
  if (tokens.empty()) throw std::invalid_argument("metric file is empty");
  std::size_t pos = 0;
  int n = 0;
  try {
    n = std::stoi(tokens[0], &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("metric file must start with the dimension");
  }
  if (pos != tokens[0].size() || n < 1 || n > 9) throw std::invalid_argument("metric dimension must be in 1..9");
  const auto un = static_cast<std::size_t>(n);
  if (tokens.size() != 1 + un * un) {
    throw std::invalid_argument("metric file needs " + std::to_string(un * un) + " entries, found " +
                                std::to_string(tokens.size() - 1));
  }
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::vector<Poly>> entries(un);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) entries[i].push_back(parse_poly(tokens[1 + i * un + j], names));
  }
  return from_polynomials(std::move(entries));
}

MetricField MetricField::euclidean(unsigned n) {
  std::vector<std::vector<Poly>> e(n, std::vector<Poly>(n, Poly(n)));
  for (unsigned i = 0; i < n; ++i) e[i][i] = Poly::constant(n, Rational(1));
  return from_polynomials(std::move(e));
}

MetricField MetricField::polar() {
  Poly r = Poly::variable(2, 0);
  return from_polynomials({{Poly::constant(2, Rational(1)), Poly(2)}, {Poly(2), r * r}});
}

Mat MetricField::at(const Vec& x) const {
  if (x.size() != static_cast<Eigen::Index>(n_)) throw std::invalid_argument("point has the wrong dimension");
  if (fn_) return fn_(x);
  Mat g(n_, n_);
  std::vector<double> xs(x.data(), x.data() + x.size());
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) g(i, j) = poly_[i][j].evaluate(xs);
  }
  return g;
}

std::vector<Mat> MetricField::partials(const Vec& x) const {
  if (x.size() != static_cast<Eigen::Index>(n_)) throw std::invalid_argument("point has the wrong dimension");
  std::vector<Mat> out;
  if (fn_) {
    if (partials_) return partials_(x);
    auto central = [&](unsigned k, double h) -> Mat {
      Vec up = x;
      Vec down = x;
      up(k) += h;
      down(k) -= h;
      return (fn_(up) - fn_(down)) / (2 * h);
    };
    for (unsigned k = 0; k < n_; ++k) out.push_back((4 * central(k, h_ / 2) - central(k, h_)) / 3);
    return out;
  }
  std::vector<double> xs(x.data(), x.data() + x.size());
  for (unsigned k = 0; k < n_; ++k) {
    Mat d(n_, n_);
    for (unsigned i = 0; i < n_; ++i) {
      for (unsigned j = 0; j < n_; ++j) d(i, j) = poly_[i][j].derivative(k).evaluate(xs);
    }
    out.push_back(std::move(d));
  }
  return out;
}

Mat MetricField::checked_at(const Vec& x, double sym_tol) const {
  Mat g = at(x);
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > sym_tol * std::max(1.0, g.cwiseAbs().maxCoeff())) {
    throw NonSymmetricMetric("metric is not symmetric at the evaluation point");
  }
  if (std::abs(g.determinant()) <= det_margin_) throw SingularMetric("metric is singular at the evaluation point");
  return g;
}

Christoffel christoffel_numeric(const MetricField& m, const Vec& x) {
  const unsigned n = m.dimension();
  Mat g = m.checked_at(x);
  auto dg = m.partials(x);
  Mat ginv = g.inverse();

  Christoffel c;
  c.n = n;
  c.lowered.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  c.raised.assign(c.lowered.size(), 0.0);
  auto at = [n](unsigned a, unsigned b, unsigned d) { return (static_cast<std::size_t>(a) * n + b) * n + d; };
  for (unsigned l = 0; l < n; ++l) {
    for (unsigned a = 0; a < n; ++a) {
      for (unsigned b = 0; b < n; ++b) c.lowered[at(l, a, b)] = 0.5 * (dg[a](l, b) + dg[b](l, a) - dg[l](a, b));
    }
  }
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        double s = 0;
        for (unsigned l = 0; l < n; ++l) s += ginv(k, l) * c.lowered[at(l, i, j)];
        c.raised[at(k, i, j)] = s;
      }
    }
  }
  double worst = 0;
  for (unsigned k = 0; k < n; ++k) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        double rhs = 0;
        for (unsigned s = 0; s < n; ++s) rhs += g(s, j) * c.raised[at(s, i, k)] + g(i, s) * c.raised[at(s, j, k)];
        worst = std::max(worst, std::abs(dg[k](i, j) - rhs));
      }
    }
  }
  c.reconstruction_residual = worst;
  return c;
}

double parallel_invariance_check(const MetricField& m, const Vec& x, const Vec& a, const Vec& dx) {
  const unsigned n = m.dimension();
  if (a.size() != static_cast<Eigen::Index>(n) || dx.size() != static_cast<Eigen::Index>(n)) {
    throw std::invalid_argument("vector has the wrong dimension");
  }
  Christoffel c = christoffel_numeric(m, x);
  Vec moved = a;
  for (unsigned k = 0; k < n; ++k) {
    double delta = 0;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) delta -= c.second_kind(k, i, j) * a(i) * dx(j);
    }
    moved(k) += delta;
  }
  Mat g0 = m.at(x);
  Mat g1 = m.checked_at(x + dx);
  return moved.dot(g1 * moved) - a.dot(g0 * a);
}

LagrangianBracketReport lagrangian_bracket_check(const MetricField& m, const std::vector<Vec>& points, double mass) {
  if (!(mass > 0)) throw std::invalid_argument("mass must be positive");
  const unsigned n = m.dimension();
  LagrangianBracketReport r;
  for (const auto& x : points) {
    Mat g = m.checked_at(x);
    // Legendre map p = mass * g^-1 ẋ, inverted by a linear solve.
    Eigen::PartialPivLU<Mat> lu(mass * g.inverse());
    Vec p0 = Vec::Ones(n);
    const double h = 1e-3;
    Mat bracket(n, n);
    for (unsigned i = 0; i < n; ++i) {
      Vec up = p0;
      Vec down = p0;
      up(i) += h;
      down(i) -= h;
      Vec dv = (lu.solve(up) - lu.solve(down)) / (2 * h);
      for (unsigned j = 0; j < n; ++j) bracket(i, j) = dv(j);
    }
    Mat expected = g / mass;
    r.max_error = std::max(r.max_error, (bracket - expected).cwiseAbs().maxCoeff());
    r.brackets.push_back(std::move(bracket));
    r.expected.push_back(std::move(expected));
  }
  return r;
}

}  // namespace docalc::geometry
