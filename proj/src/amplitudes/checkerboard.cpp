#include "docalc/amplitudes/checkerboard.hpp"

#include <limits>
#include <string>

namespace docalc::amplitudes {

namespace {

BigInt big_lcm(const BigInt& x, const BigInt& y) { return x / boost::multiprecision::gcd(x, y) * y; }

// z = numerator over `den`, both parts scaled.
GaussInt scaled(const GaussRational& z, const BigInt& den) {
  return {BigInt(z.re.num()) * (den / z.re.den()), BigInt(z.im.num()) * (den / z.im.den())};
}

}  // namespace

LightconeLattice::LightconeLattice(unsigned horizon, Source src) : horizon_(horizon), source_(src), den_(1) {
  if (horizon > kLatticeHorizonCap) {
    throw std::length_error("lattice horizon " + std::to_string(horizon) + " exceeds the cap");
  }
  for (const auto& z : {src.left, src.right}) {
    den_ = big_lcm(den_, BigInt(z.re.den()));
    den_ = big_lcm(den_, BigInt(z.im.den()));
  }
  const std::size_t n = static_cast<std::size_t>(horizon + 1) * (horizon + 2) / 2;
  psi_l_.assign(n, GaussInt{});
  psi_r_.assign(n, GaussInt{});
}

std::size_t LightconeLattice::index(unsigned a, unsigned b) const {
  if (a + b > horizon_) throw std::out_of_range("lattice point beyond the horizon");
  // Diagonal s = a + b starts after all shorter diagonals.
  const std::size_t s = a + b;
  return s * (s + 1) / 2 + a;
}

GaussRational LightconeLattice::value(const GaussInt& z) const {
  auto part = [&](const BigInt& num) {
    const BigInt g = boost::multiprecision::gcd(num, den_);
    const BigInt p = num / g, q = den_ / g;
    const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max());
    if (abs(p) > limit || q > limit) throw ArithmeticOverflow("lattice amplitude does not fit a 64-bit rational");
    return Rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
  };
  return {part(z.re), part(z.im)};
}

std::string LightconeLattice::fraction(const BigInt& num) const {
  const BigInt g = boost::multiprecision::gcd(num, den_);
  const BigInt q = den_ / (g == 0 ? BigInt(1) : g);
  const BigInt p = g == 0 ? BigInt(0) : num / g;
  return q == 1 || p == 0 ? p.str() : p.str() + "/" + q.str();
}

double LightconeLattice::norm(const GaussInt& z) const {
  const double d = static_cast<double>(den_);
  const double re = static_cast<double>(z.re) / d, im = static_cast<double>(z.im) / d;
  return re * re + im * im;
}

LightconeLattice checkerboard_evolve(Source src, unsigned horizon) {
  LightconeLattice l(horizon, src);
  // (x + iy) + i(u + iv) = (x - v) + i(y + u).
  auto step = [](const GaussInt& same, const GaussInt& other) {
    return GaussInt{same.re - other.im, same.im + other.re};
  };
  l.psi_l_[l.index(0, 0)] = scaled(src.left, l.den_);
  l.psi_r_[l.index(0, 0)] = scaled(src.right, l.den_);
  for (unsigned s = 1; s <= horizon; ++s) {
    for (unsigned a = 0; a <= s; ++a) {
      const unsigned b = s - a;
      if (b > 0) l.psi_l_[l.index(a, b)] = step(l.psi_l_[l.index(a, b - 1)], l.psi_r_[l.index(a, b - 1)]);
      if (a > 0) l.psi_r_[l.index(a, b)] = step(l.psi_r_[l.index(a - 1, b)], l.psi_l_[l.index(a - 1, b)]);
    }
  }
  return l;
}

GaussRational checkerboard_path_oracle(Source src, unsigned a, unsigned b, Direction entry) {
  if (a + b > kPathOracleCap) throw std::length_error("path oracle target beyond the enumeration cap");
  // Enumerate all step words with a 'R' steps and b 'L' steps as bitmasks.
  const unsigned len = a + b;
  std::int64_t counts[2][4] = {{0, 0, 0, 0}, {0, 0, 0, 0}};  // [source direction][corners mod 4]
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << len); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != a) continue;  // bit set = right step
    for (int start = 0; start < 2; ++start) {
      Direction heading = start == 0 ? Direction::Left : Direction::Right;
      unsigned corners = 0;
      for (unsigned k = 0; k < len; ++k) {
        Direction step = (mask >> k) & 1U ? Direction::Right : Direction::Left;
        if (step != heading) ++corners;
        heading = step;
      }
      if (heading == entry) ++counts[start][corners % 4];
    }
  }
  const GaussRational i = GaussRational::i();
  auto weigh = [&](const std::int64_t (&c)[4]) {
    GaussRational z(0);
    GaussRational power(1);
    for (int k = 0; k < 4; ++k) {
      z += GaussRational(c[k]) * power;
      power *= i;
    }
    return z;
  };
  return src.left * weigh(counts[0]) + src.right * weigh(counts[1]);
}

}  // namespace docalc::amplitudes
