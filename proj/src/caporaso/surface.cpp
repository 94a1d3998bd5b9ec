#include "caporaso/surface.hpp"

#include "ring/error.hpp"

namespace refsev {

SurfaceBundle SurfaceBundle::p2(long d) {
  if (d < 0) fail(ErrorCode::kInvalidArgument, "degree must be >= 0");
  return {Family::kP2, {0, 1, d}};
}

SurfaceBundle SurfaceBundle::p11m(long m, long d) {
  if (m < 1 || d < 0) fail(ErrorCode::kInvalidArgument, "P(1,1,m) needs m >= 1, d >= 0");
  return {Family::kP11m, {0, m, d}};
}

SurfaceBundle SurfaceBundle::sigma(long m, long c, long d) {
  if (m < 0 || c < 0 || d < 0) {
    fail(ErrorCode::kInvalidArgument, "Sigma_m needs m, c, d >= 0");
  }
  return {Family::kSigma, {c, m, d}};
}

Rational SurfaceBundle::l_squared() const {
  const auto& p = polygon_;
  if (family_ == Family::kP2) return Rational(p.d * p.d);
  return Rational(2 * p.c * p.d + p.m * p.d * p.d);
}

Rational SurfaceBundle::lk() const {
  const auto& p = polygon_;
  if (family_ == Family::kP2) return Rational(-3 * p.d);
  return Rational(-2 * p.c - (p.m + 2) * p.d);
}

Rational SurfaceBundle::k_squared() const {
  return family_ == Family::kP2 ? Rational(9) : Rational(8);
}

Rational SurfaceBundle::chi_l() const { return Rational(polygon_.dim() + 1); }

std::string SurfaceBundle::describe() const {
  const auto& p = polygon_;
  switch (family_) {
    case Family::kP2:
      return "P2(d=" + std::to_string(p.d) + ")";
    case Family::kP11m:
      return "P(1,1," + std::to_string(p.m) + ")(d=" + std::to_string(p.d) + ")";
    case Family::kSigma:
      return "Sigma_" + std::to_string(p.m) + "(c=" + std::to_string(p.c) +
             ",d=" + std::to_string(p.d) + ")";
  }
  return "";
}

}  // namespace refsev
