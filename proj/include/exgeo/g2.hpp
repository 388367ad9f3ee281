#pragma once

#include <optional>
#include <vector>

#include "exgeo/curvature.hpp"

namespace exgeo {

enum class G2Variant { section2, section6 };

/// A definite 3-form on a 7-dimensional space together with the data it
/// induces: metric, orientation, and the dual 4-form.
struct G2Structure {
  Form<Rational> phi;       // degree 3
  SymTensor2 metric;        // induced, positive-definite
  int orientation;          // induced
  Form<Rational> star_phi;  // degree 4, star of phi for the induced data
};

/// Result of the metric reconstruction 6 b(x,y) = (x . phi) ^ (y . phi) ^ phi.
/// When det(B)^{1/9} is irrational the unnormalized B is returned with
/// `normalized == false`; nothing is ever rounded.
struct G2MetricResult {
  bool definite = false;
  bool normalized = false;
  int orientation = 0;
  MatQ b;                          // unnormalized bilinear form (always set)
  std::optional<SymTensor2> metric;  // set when definite and normalized
};

Form<Rational> standard_g2_phi(G2Variant variant, const SpacePtr& space);

/// Builds the full structure for one of the named literal forms.
G2Structure standard_g2_structure(G2Variant variant);

G2MetricResult metric_from_g2_form(const Form<Rational>& phi);

/// Builds a G2Structure from an arbitrary definite 3-form (throws
/// InvalidInputError when the form is not definite or not normalizable).
G2Structure g2_structure_from_form(const Form<Rational>& phi);

/// g(x cross y, z) = phi(x, y, z).
VecQ cross_product(const VecQ& x, const VecQ& y, const G2Structure& g);

/// Basis of {A in ambient : A . form = 0}, where A acts on covariant slots as
/// minus the sum of insertions. Ambient is so(n) (skew matrices) or gl(n).
enum class Ambient { so_n, gl_n };
std::vector<MatQ> stabilizer_algebra(const Form<Rational>& form, Ambient ambient);

struct G2TwoFormSplit {
  Form<Rational> part7, part14;
};
/// Eigen-split of a 2-form under a |-> *(phi ^ a): eigenvalue +2 on the
/// 7-dimensional part, -1 on the 14-dimensional one.
G2TwoFormSplit g2_two_form_split(const Form<Rational>& a, const G2Structure& g);

struct G2ThreeFormSplit {
  Form<Rational> part1, part7, part27;
};
G2ThreeFormSplit g2_three_form_split(const Form<Rational>& c, const G2Structure& g);

/// Spin(7) data on an 8-dimensional space. The customary basis e_0..e_7 is
/// stored in slots 1..8 (slot = customary index + 1).
struct Spin7Structure {
  Form<Rational> Phi;  // degree 4, self-dual, Phi ^ Phi = 14 vol
  SymTensor2 metric;
};

Spin7Structure spin7_from_g2(const G2Structure& g);
Spin7Structure standard_spin7_structure();

struct Spin7Split {
  // degree 2: part7 + part21; degree 3: part8 + part48;
  // degree 4: part1 + part7 + part27 + part35.
  std::vector<std::pair<int, Form<Rational>>> parts;  // (dimension label, part)
};
Spin7Split spin7_split(const Form<Rational>& x, const Spin7Structure& s);

/// Matrix action on a covariant form: minus the sum of slot insertions,
/// the differential of the pullback action. For A = x (x) alpha this is
/// -alpha ^ (x . w).
Form<Rational> matrix_action(const MatQ& a, const Form<Rational>& w);

}  // namespace exgeo
