#include "exgeo/g2.hpp"

namespace exgeo {

Form<Rational> standard_g2_phi(G2Variant variant, const SpacePtr& space) {
  Form<Rational> phi(space, 3);
  auto add = [&](int i, int j, int k, long c) {
    phi.add_term(mask_from_indices({i, j, k}), Rational(c));
  };
  if (variant == G2Variant::section2) {
    // e^123 + e^145 + e^167 + e^246 - e^257 - e^347 - e^356
    add(1, 2, 3, 1);
    add(1, 4, 5, 1);
    add(1, 6, 7, 1);
    add(2, 4, 6, 1);
    add(2, 5, 7, -1);
    add(3, 4, 7, -1);
    add(3, 5, 6, -1);
  } else {
    // e^123 - e^1(e^45 + e^67) - e^2(e^46 + e^75) - e^3(e^47 + e^56)
    add(1, 2, 3, 1);
    add(1, 4, 5, -1);
    add(1, 6, 7, -1);
    add(2, 4, 6, -1);
    add(2, 5, 7, 1);  // -e^2 ^ e^75 = +e^257
    add(3, 4, 7, -1);
    add(3, 5, 6, -1);
  }
  return phi;
}

G2MetricResult metric_from_g2_form(const Form<Rational>& phi) {
  if (phi.dim() != 7 || phi.degree() != 3)
    throw InvalidInputError("metric_from_g2_form: need a 3-form in dimension 7");
  const SpacePtr& sp = phi.space();
  const int n = 7;
  G2MetricResult res;
  res.b = MatQ::Zero(n, n);
  const Mask full = full_mask(n);
  for (int i = 1; i <= n; ++i) {
    VecQ ei = VecQ::Zero(n);
    ei(i - 1) = Rational(1);
    const auto phi_i = interior(ei, phi);
    for (int j = i; j <= n; ++j) {
      VecQ ej = VecQ::Zero(n);
      ej(j - 1) = Rational(1);
      const auto w = wedge(wedge(phi_i, interior(ej, phi)), phi);
      res.b(i - 1, j - 1) = w.coeff(full) / Rational(6);
      res.b(j - 1, i - 1) = res.b(i - 1, j - 1);
    }
  }

  // Definiteness of B (or -B) via leading principal minors.
  auto positive_definite = [&](const MatQ& m) {
    for (int k = 1; k <= n; ++k)
      if (exact_lu(m.topLeftCorner(k, k)).determinant().sign() <= 0) return false;
    return true;
  };
  MatQ b = res.b;
  if (positive_definite(b)) {
    res.definite = true;
    res.orientation = +1;
  } else if (positive_definite(MatQ(-b))) {
    res.definite = true;
    res.orientation = -1;
    b = -b;
  } else {
    return res;
  }

  Rational root;
  const Rational det = exact_lu(b).determinant();
  if (!nth_root(det, 9, &root)) return res;  // definite but kept unnormalized
  res.normalized = true;
  res.metric = SymTensor2(sp, MatQ((Rational(1) / root) * b));
  return res;
}

G2Structure g2_structure_from_form(const Form<Rational>& phi) {
  auto m = metric_from_g2_form(phi);
  if (!m.definite)
    throw InvalidInputError("g2_structure_from_form: the 3-form is not definite");
  if (!m.normalized)
    throw InvalidInputError(
        "g2_structure_from_form: det(B)^{1/9} is irrational; "
        "no exact induced metric");
  auto induced = InnerSpace::make(7, m.metric->m, m.orientation);
  // Re-key phi on the induced space so the star uses the induced data.
  Form<Rational> phi2(induced, 3);
  for (const auto& [mask, c] : phi.terms()) phi2.add_term(mask, c);
  auto star = hodge_star(phi2);
  return G2Structure{phi2, SymTensor2(induced, m.metric->m), m.orientation, star};
}

G2Structure standard_g2_structure(G2Variant variant) {
  auto sp = InnerSpace::standard(7);
  return g2_structure_from_form(standard_g2_phi(variant, sp));
}

VecQ cross_product(const VecQ& x, const VecQ& y, const G2Structure& g) {
  const int n = 7;
  if (x.size() != n || y.size() != n)
    throw DimensionError("cross_product: vectors must live in R^7");
  // g(x cross y, e_k) = phi(x, y, e_k): solve through the metric.
  VecQ rhs = VecQ::Zero(n);
  const auto contracted = interior(VecQ(y), interior(VecQ(x), g.phi));
  for (const auto& [m, c] : contracted.terms()) rhs(mask_to_indices(m)[0] - 1) = c;
  if (g.metric.m == MatQ(MatQ::Identity(n, n))) return rhs;
  bool ok = true;
  VecQ out = exact_solve(g.metric.m, rhs, &ok);
  return out;
}

Form<Rational> matrix_action(const MatQ& a, const Form<Rational>& w) {
  const int n = w.dim();
  if (a.rows() != n || a.cols() != n)
    throw DimensionError("matrix_action: matrix shape mismatch");
  Form<Rational> out(w.space(), w.degree());
  // -(sum over slots of inserting A): for each term and each used index j,
  // replace e^j by sum_i A_{ij} e^i contracted appropriately. Concretely
  // A . w = -sum_{i,j} A_{ij} e^j ^ (e_i . w).
  for (int i = 1; i <= n; ++i) {
    VecQ ei = VecQ::Zero(n);
    ei(i - 1) = Rational(1);
    Form<Rational> cut = interior(ei, w);
    if (cut.is_zero()) continue;
    for (int j = 1; j <= n; ++j) {
      if (a(i - 1, j - 1).is_zero()) continue;
      Form<Rational> ej(w.space(), 1);
      ej.add_term(mask_from_indices({j}), Rational(1));
      out -= a(i - 1, j - 1) * wedge(ej, cut);
    }
  }
  return out;
}

std::vector<MatQ> stabilizer_algebra(const Form<Rational>& form, Ambient ambient) {
  const int n = form.dim();
  // Parametrize the ambient algebra.
  std::vector<MatQ> gens;
  if (ambient == Ambient::so_n) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        MatQ m = MatQ::Zero(n, n);
        m(i, j) = Rational(1);
        m(j, i) = Rational(-1);
        gens.push_back(m);
      }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        MatQ m = MatQ::Zero(n, n);
        m(i, j) = Rational(1);
        gens.push_back(m);
      }
  }
  const auto target_masks = masks_of_degree(n, form.degree());
  MatQ sys(static_cast<long>(target_masks.size()), static_cast<long>(gens.size()));
  for (std::size_t c = 0; c < gens.size(); ++c) {
    auto img = matrix_action(gens[c], form);
    for (std::size_t r = 0; r < target_masks.size(); ++r)
      sys(static_cast<long>(r), static_cast<long>(c)) = img.coeff(target_masks[r]);
  }
  MatQ kern = kernel_basis(sys);
  std::vector<MatQ> basis;
  for (long c = 0; c < kern.cols(); ++c) {
    const VecQ coeffs = integerize(kern.col(c));
    MatQ m = MatQ::Zero(n, n);
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (!coeffs(static_cast<long>(g)).is_zero())
        m += coeffs(static_cast<long>(g)) * gens[g];
    basis.push_back(m);
  }
  return basis;
}

G2TwoFormSplit g2_two_form_split(const Form<Rational>& a, const G2Structure& g) {
  if (a.dim() != 7 || a.degree() != 2)
    throw InvalidInputError("g2_two_form_split: need a 2-form in dimension 7");
  // L(a) = *(phi ^ a) has eigenvalues +2 and -1; the projectors are
  // P7 = (L + 1)/3 and P14 = (2 - L)/3.
  const auto la = hodge_star(wedge(g.phi, a));
  const Rational third(1, 3);
  Form<Rational> part7 = third * (la + a);
  Form<Rational> part14 = third * (Rational(2) * a - la);
  return {part7, part14};
}

G2ThreeFormSplit g2_three_form_split(const Form<Rational>& c, const G2Structure& g) {
  if (c.dim() != 7 || c.degree() != 3)
    throw InvalidInputError("g2_three_form_split: need a 3-form in dimension 7");
  // part1: projection onto R phi (|phi|^2 = 7 for the standard normalization).
  const Rational phi_norm2 = form_inner(g.phi, g.phi);
  Form<Rational> part1 = (form_inner(c, g.phi) / phi_norm2) * g.phi;

  // part7: orthogonal projection onto span{ *(phi ^ e^i) }.
  std::vector<Form<Rational>> basis;
  for (int i = 1; i <= 7; ++i) {
    Form<Rational> ei(c.space(), 1);
    ei.add_term(mask_from_indices({i}), Rational(1));
    basis.push_back(hodge_star(wedge(g.phi, ei)));
  }
  MatQ gram(7, 7);
  VecQ rhs(7);
  for (int i = 0; i < 7; ++i) {
    rhs(i) = form_inner(c, basis[static_cast<size_t>(i)]);
    for (int j = 0; j < 7; ++j)
      gram(i, j) = form_inner(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
  }
  bool ok = true;
  VecQ coeff = exact_solve(gram, rhs, &ok);
  if (!ok) throw Error("g2_three_form_split: Gram solve failed");
  Form<Rational> part7(c.space(), 3);
  for (int i = 0; i < 7; ++i) part7 += coeff(i) * basis[static_cast<size_t>(i)];

  Form<Rational> part27 = c - part1 - part7;
  return {part1, part7, part27};
}

namespace {

// slot = customary index + 1 for the Spin(7) basis e_0..e_7.
Form<Rational> lift_7_to_8(const Form<Rational>& w, const SpacePtr& sp8) {
  Form<Rational> out(sp8, w.degree());
  for (const auto& [m, c] : w.terms()) out.add_term(m << 1, c);
  return out;
}

}  // namespace

Spin7Structure spin7_from_g2(const G2Structure& g) {
  if (!g.metric.space->is_standard())
    throw InvalidInputError("spin7_from_g2: non-standard induced metric");
  auto sp8 = InnerSpace::standard(8);
  Form<Rational> e0(sp8, 1);
  e0.add_term(mask_from_indices({1}), Rational(1));
  const auto Phi = wedge(e0, lift_7_to_8(g.phi, sp8)) + lift_7_to_8(g.star_phi, sp8);
  return Spin7Structure{Phi, SymTensor2::metric(sp8)};
}

Spin7Structure standard_spin7_structure() {
  return spin7_from_g2(standard_g2_structure(G2Variant::section2));
}

Spin7Split spin7_split(const Form<Rational>& x, const Spin7Structure& s) {
  if (x.dim() != 8) throw InvalidInputError("spin7_split: need a form in dimension 8");
  Spin7Split out;
  const auto& Phi = s.Phi;
  switch (x.degree()) {
    case 2: {
      // L(a) = *(Phi ^ a): eigenvalue 3 on the 7-part, -1 on the 21-part.
      const auto la = hodge_star(wedge(Phi, x));
      const Rational quarter(1, 4);
      out.parts.emplace_back(7, quarter * (la + x));
      out.parts.emplace_back(21, quarter * (Rational(3) * x - la));
      break;
    }
    case 3: {
      // part8 spans { *(Phi ^ e^i) }; the rest satisfies Phi ^ beta = 0.
      std::vector<Form<Rational>> basis;
      for (int i = 1; i <= 8; ++i) {
        Form<Rational> ei(x.space(), 1);
        ei.add_term(mask_from_indices({i}), Rational(1));
        basis.push_back(hodge_star(wedge(Phi, ei)));
      }
      MatQ gram(8, 8);
      VecQ rhs(8);
      for (int i = 0; i < 8; ++i) {
        rhs(i) = form_inner(x, basis[static_cast<size_t>(i)]);
        for (int j = 0; j < 8; ++j)
          gram(i, j) =
              form_inner(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
      }
      bool ok = true;
      VecQ coeff = exact_solve(gram, rhs, &ok);
      if (!ok) throw Error("spin7_split: Gram solve failed");
      Form<Rational> part8(x.space(), 3);
      for (int i = 0; i < 8; ++i) part8 += coeff(i) * basis[static_cast<size_t>(i)];
      out.parts.emplace_back(8, part8);
      out.parts.emplace_back(48, x - part8);
      break;
    }
    case 4: {
      // Anti-self-dual part is the 35; the self-dual rest splits as
      // R Phi + (sharp a). Phi images + orthogonal 27.
      const auto star_x = hodge_star(x);
      const Rational half(1, 2);
      Form<Rational> sd = half * (x + star_x);
      Form<Rational> asd = half * (x - star_x);
      const Rational phi_norm2 = form_inner(Phi, Phi);
      Form<Rational> part1 = (form_inner(sd, Phi) / phi_norm2) * Phi;

      // Images (sharp a) . Phi for a basis of the 2-form 7-part.
      std::vector<Form<Rational>> images;
      for (Mask m : masks_of_degree(8, 2)) {
        Form<Rational> b(x.space(), 2);
        b.add_term(m, Rational(1));
        auto a7 = spin7_split(b, s).parts[0].second;
        if (a7.is_zero()) continue;
        // sharp of a 2-form alpha is the skew matrix A_{ij} = alpha(e_i, e_j).
        MatQ a = MatQ::Zero(8, 8);
        for (const auto& [mm, c] : a7.terms()) {
          auto id = mask_to_indices(mm);
          a(id[0] - 1, id[1] - 1) = c;
          a(id[1] - 1, id[0] - 1) = -c;
        }
        images.push_back(matrix_action(a, Phi));
      }
      // Select a 7-dimensional spanning subset via rank growth.
      std::vector<Form<Rational>> span;
      const auto masks4 = masks_of_degree(8, 4);
      MatQ stacked(7, static_cast<long>(masks4.size()));
      long rows = 0;
      for (const auto& img : images) {
        if (rows == 7) break;
        for (std::size_t cidx = 0; cidx < masks4.size(); ++cidx)
          stacked(rows, static_cast<long>(cidx)) = img.coeff(masks4[cidx]);
        if (exact_rank(stacked.topRows(rows + 1)) == rows + 1) {
          span.push_back(img);
          ++rows;
        }
      }
      if (rows != 7) throw Error("spin7_split: 7-part image basis not found");
      MatQ gram(7, 7);
      VecQ rhs(7);
      for (int i = 0; i < 7; ++i) {
        rhs(i) = form_inner(sd, span[static_cast<size_t>(i)]);
        for (int j = 0; j < 7; ++j)
          gram(i, j) =
              form_inner(span[static_cast<size_t>(i)], span[static_cast<size_t>(j)]);
      }
      bool ok = true;
      VecQ coeff = exact_solve(gram, rhs, &ok);
      if (!ok) throw Error("spin7_split: Gram solve failed");
      Form<Rational> part7(x.space(), 4);
      for (int i = 0; i < 7; ++i) part7 += coeff(i) * span[static_cast<size_t>(i)];

      Form<Rational> part27 = sd - part1 - part7;
      out.parts.emplace_back(1, part1);
      out.parts.emplace_back(7, part7);
      out.parts.emplace_back(27, part27);
      out.parts.emplace_back(35, asd);
      break;
    }
    default:
      throw DegreeError("spin7_split: degree must be 2, 3, or 4");
  }
  return out;
}

}  // namespace exgeo
