#pragma once

#include <string>
#include <vector>

#include "exgeo/dga.hpp"
#include "exgeo/g2.hpp"
#include "exgeo/poly.hpp"
#include "exgeo/sphere.hpp"

namespace exgeo {

/// One named exact identity inside a verification run.
struct CheckItem {
  std::string name;
  bool passed;
  std::string witness;  // pretty-printed residual when failed
};

struct VerificationReport {
  std::string check;
  std::vector<CheckItem> items;
  bool passed() const {
    for (const auto& i : items)
      if (!i.passed) return false;
    return !items.empty();
  }
};

/// The su(3) coframe model of the flag manifold: Maurer-Cartan consistency
/// and the nearly-Kahler structure equations dOmega = 3 Re Psi,
/// dPsi = -2i Omega ^ Omega.
VerificationReport flag_nearly_kahler_check();

enum class G2ConeMode { formal_nk, flag_explicit };

/// Closedness of the two cone forms built from a nearly-Kahler structure;
/// in explicit mode additionally re-derives the standard coefficient pattern
/// in the eta-coframe.
VerificationReport g2_cone_check(G2ConeMode mode);

/// Polynomial-coefficient verification of the six-sphere identities
/// d(N . phi) = 3 phi, d(N . *phi) = 4 *phi, and the restriction identity
/// 4 i* *phi = 2 sigma ^ sigma at exact sphere points.
VerificationReport s6_nearly_kahler_check(int sample_points = 50);

/// The seven-sphere identities psi ^ psi = 14 vol, d(N . psi) = 4 psi,
/// (N . psi) ^ psi = 7 N . vol, and the pointwise star identity behind
/// d phi = 4 *phi.
VerificationReport s7_nearly_parallel_check(int sample_frames = 20);

/// Closedness of the cone 4-form Phi = t^3 dt ^ psi + t^4 *psi and the
/// primitive identity Phi = d(t^4 psi)/4; pins the normalization d psi = 4 *psi.
VerificationReport spin7_cone_check();

/// Runs all five checks.
std::vector<VerificationReport> verify_all();

}  // namespace exgeo
