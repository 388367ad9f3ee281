#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exgeo/g2.hpp"

namespace exgeo {

/// Finite-dimensional real Lie algebra given by exact structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k, optionally with a matrix realization
/// and a chosen maximal Abelian subalgebra (torus).
class LieAlgebra {
 public:
  LieAlgebra(int dim, std::vector<std::vector<std::vector<Rational>>> c);

  int dim() const { return dim_; }
  const Rational& c(int i, int j, int k) const { return c_[i][j][k]; }

  VecQ bracket(const VecQ& u, const VecQ& v) const;
  MatQ ad(const VecQ& v) const;
  MatQ ad_basis(int i) const;

  /// Exact Jacobi check over all basis triples.
  bool jacobi_holds() const;

  const std::vector<MatC>& matrices() const { return matrices_; }
  void set_matrices(std::vector<MatC> m) { matrices_ = std::move(m); }

  const std::vector<VecQ>& torus() const { return torus_; }
  void set_torus(std::vector<VecQ> t);

 private:
  int dim_;
  std::vector<std::vector<std::vector<Rational>>> c_;
  std::vector<MatC> matrices_;
  std::vector<VecQ> torus_;
};

struct ClosureError : Error {
  ClosureError(int i, int j)
      : Error("basis is not closed under commutator at pair (" + std::to_string(i) +
              ", " + std::to_string(j) + ")"),
        pair{i, j} {}
  std::pair<int, int> pair;
};

/// Expands all commutators in the given basis by an exact linear solve.
/// Throws ClosureError naming the offending pair when the basis is not closed.
LieAlgebra structure_constants_from_matrices(const std::vector<MatC>& mats);
LieAlgebra structure_constants_from_matrices(const std::vector<MatQ>& mats);

/// K(X, Y) = Tr(ad_X ad_Y) in the algebra basis.
MatQ killing_form(const LieAlgebra& l);

/// The rescaled invariant form -Tr(X Y)/2 of the matrix realization.
MatQ rescaled_trace_form(const LieAlgebra& l);

bool is_negative_definite(const MatQ& sym);

/// Exact coordinate of a root: value on torus basis elements.
struct RootSystem {
  int rank = 0;
  MatQ gram_t;                    // invariant inner product restricted to t
  MatQ gram_dual;                 // induced inner product on t*
  std::vector<VecQ> roots;        // all roots, as value vectors on the torus basis
  std::vector<std::size_t> positive;
  std::vector<std::size_t> simple;
  std::vector<VecQ> fundamental_weights;
  bool torus_maximal = true;
  std::string warning;

  Rational inner(const VecQ& a, const VecQ& b) const {
    return (a.transpose() * gram_dual * b)(0, 0);
  }
  /// Cartan pairing 2 (a, b) / (b, b).
  Rational cartan(const VecQ& a, const VecQ& b) const {
    return Rational(2) * inner(a, b) / inner(b, b);
  }
  bool is_dominant(const VecQ& weight) const;
};

/// Simultaneously reduces ad restricted to the declared torus into exact 2x2
/// rotation blocks and reads off the roots as linear forms on t. The scalar
/// product on t is the restriction of `invariant_form` (defaults to the
/// rescaled trace form when a matrix realization exists, else minus the
/// Killing form). `positive_choice`, when given, declares a root positive
/// when its pairing with the functional is > 0; the default is the
/// lexicographic-positive rule on the torus coordinates.
RootSystem roots_from_torus(const LieAlgebra& l,
                            std::optional<MatQ> invariant_form = std::nullopt,
                            std::optional<VecQ> positive_choice = std::nullopt);

/// Order of the reflection group generated by all root reflections, by orbit
/// closure on the root permutations. Guarded at 10^6 elements.
long weyl_group_order(const RootSystem& rs);

/// Exact display coordinate a + b sqrt(radicand).
struct SurdCoord {
  Rational rat;       // a
  Rational coef;      // b
  Rational radicand;  // under the square root
  double approx() const;
  std::string str() const;
};

/// Coordinates of a root/weight in an orthonormal basis of t*, kept exact as
/// surds (rank <= 2).
std::vector<SurdCoord> display_coordinates(const RootSystem& rs, const VecQ& v);

// Built-in presentations.
LieAlgebra lie_su2();
LieAlgebra lie_su3();
/// The stabilizer algebra of the standard definite 3-form, with a torus found
/// by exact centralizer search.
LieAlgebra lie_g2();

// Exact minimal polynomial machinery (used by the root computation; exposed
// for the weight-space decomposition as well).

/// Monic minimal polynomial coefficients (low to high degree, trailing 1).
std::vector<Rational> minimal_polynomial(const MatQ& m);

/// All rational roots (with multiplicity stripped) of a rational polynomial.
std::vector<Rational> rational_roots(const std::vector<Rational>& poly);

}  // namespace exgeo
