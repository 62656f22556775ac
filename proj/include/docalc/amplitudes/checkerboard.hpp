#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "docalc/rational.hpp"

namespace docalc::amplitudes {

enum class Direction { Left, Right };

/// Amplitudes at the origin. The default is a single right-mover.
struct Source {
  GaussRational left{0};
  GaussRational right{1};
};

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-size Gaussian integer. Lattice amplitudes grow like 2^(a+b).
struct GaussInt {
  BigInt re;
  BigInt im;
  friend bool operator==(const GaussInt&, const GaussInt&) = default;
};

/// ψ_L(a, b) and ψ_R(a, b) for lightcone points with a + b <= horizon.
/// A right-mover steps in a, a left-mover in b. Values are stored as
/// Gaussian-integer numerators over one shared denominator (the lcm of the
/// source denominators), so no entry overflows.
class LightconeLattice {
 public:
  LightconeLattice(unsigned horizon, Source src);

  unsigned horizon() const { return horizon_; }
  const Source& source() const { return source_; }
  const BigInt& denominator() const { return den_; }

  const GaussInt& left_numerator(unsigned a, unsigned b) const { return psi_l_[index(a, b)]; }
  const GaussInt& right_numerator(unsigned a, unsigned b) const { return psi_r_[index(a, b)]; }
  /// Exact value; throws ArithmeticOverflow when it does not fit Rational.
  GaussRational left(unsigned a, unsigned b) const { return value(left_numerator(a, b)); }
  GaussRational right(unsigned a, unsigned b) const { return value(right_numerator(a, b)); }
  GaussRational at(unsigned a, unsigned b, Direction d) const { return d == Direction::Left ? left(a, b) : right(a, b); }

  /// Reduced "p/q" strings of the real and imaginary parts, any size.
  std::string re_str(const GaussInt& z) const { return fraction(z.re); }
  std::string im_str(const GaussInt& z) const { return fraction(z.im); }
  /// |ψ|² as a double (may be inf for very large horizons).
  double norm(const GaussInt& z) const;

 private:
  friend LightconeLattice checkerboard_evolve(Source src, unsigned horizon);

  std::size_t index(unsigned a, unsigned b) const;
  GaussRational value(const GaussInt& z) const;
  std::string fraction(const BigInt& num) const;

  unsigned horizon_;
  Source source_;
  BigInt den_;
  std::vector<GaussInt> psi_l_;
  std::vector<GaussInt> psi_r_;
};

inline constexpr unsigned kLatticeHorizonCap = 1000;
inline constexpr unsigned kPathOracleCap = 24;

/// ψ_L(a, b+1) = ψ_L(a, b) + iψ_R(a, b), ψ_R(a+1, b) = ψ_R(a, b) + iψ_L(a, b).
LightconeLattice checkerboard_evolve(Source src, unsigned horizon);

/// Σ over monotone paths from the origin to (a, b) entering in direction
/// `entry` of source amplitude times i^corners. The source direction counts
/// as the path's first segment.
GaussRational checkerboard_path_oracle(Source src, unsigned a, unsigned b, Direction entry);

}  // namespace docalc::amplitudes
