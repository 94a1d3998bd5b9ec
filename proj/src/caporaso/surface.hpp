#pragma once

#include <string>

#include "ring/ylaurent.hpp"

namespace refsev {

// Lattice polygon Delta_{c,m,d} = {x, y >= 0, y <= d, x + m y <= m d + c}.
struct Polygon {
  long c = 0;
  long m = 0;
  long d = 0;

  // Lattice length of the bottom edge, c + m d.
  long bottom_length() const { return c + m * d; }
  // #(Delta cap Z^2) - 1.
  long dim() const { return (d + 1) * (c + 1) + m * d * (d + 1) / 2 - 1; }
  Polygon minus_h() const { return {c, m, d - 1}; }
  friend bool operator==(const Polygon&, const Polygon&) = default;
};

enum class Family { kP2, kP11m, kSigma };

// A surface with a line bundle from one of the three families, with the
// intersection data entering the generating functions. For P(1,1,m) the
// data is that of the minimal resolution Sigma_m with L = dH.
class SurfaceBundle {
 public:
  static SurfaceBundle p2(long d);
  static SurfaceBundle p11m(long m, long d);
  static SurfaceBundle sigma(long m, long c, long d);

  Family family() const { return family_; }
  const Polygon& polygon() const { return polygon_; }
  long dim() const { return polygon_.dim(); }
  long hl() const { return polygon_.bottom_length(); }

  Rational l_squared() const;
  Rational lk() const;
  Rational k_squared() const;
  Rational chi_l() const;
  Rational chi_o() const { return 1; }
  // L(L - K)/2 = chi(L) - chi(O).
  Rational half_l_l_minus_k() const { return chi_l() - chi_o(); }

  std::string describe() const;

 private:
  SurfaceBundle(Family f, Polygon p) : family_(f), polygon_(p) {}

  Family family_;
  Polygon polygon_;
};

}  // namespace refsev
