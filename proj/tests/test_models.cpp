#include "doctest.h"
#include "exgeo/verify.hpp"
#include "oracle_helpers.hpp"

using namespace exgeo;

TEST_CASE("polynomials: exact ring operations and calculus") {
  // (x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2
  Poly x1 = Poly::var(1), x2 = Poly::var(2);
  Poly sq = (x1 + x2) * (x1 + x2);
  Poly expect = x1 * x1 + Poly(2L) * x1 * x2 + x2 * x2;
  CHECK(sq == expect);
  CHECK(sq.derivative(1) == Poly(2L) * (x1 + x2));
  VecQ p(2);
  p << Rational(1, 2), Rational(3);
  CHECK(sq.eval(p) == Rational(49, 4));
  CHECK((sq - sq).is_zero());
}

TEST_CASE("polynomial forms: d^2 = 0 and Cartan calculus") {
  auto sp = InnerSpace::standard(4);
  oracle::Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    // random 1-form with random quadratic coefficients
    FormP f(sp, 1);
    for (int i = 1; i <= 4; ++i) {
      Poly c;
      for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
          c += Poly(rng.rat()) * Poly::var(a) * Poly::var(b);
      f.add_term(mask_from_indices({i}), c);
    }
    CHECK(exterior_d(exterior_d(f)).is_zero());
  }
  // d x1 ^ dx2 evaluated: d(x1 dx2) = dx1 ^ dx2
  FormP f(sp, 1);
  f.add_term(mask_from_indices({2}), Poly::var(1));
  FormP df = exterior_d(f);
  CHECK(df.coeff(mask_from_indices({1, 2})) == Poly(1L));
}

TEST_CASE("rational sphere points") {
  auto pts = rational_sphere_points(7, 100);
  REQUIRE(pts.size() == 100);
  VecQ pole = VecQ::Zero(7);
  pole(0) = Rational(1);
  CHECK(pts[0] == pole);
  for (const auto& p : pts) {
    Rational norm(0);
    for (long i = 0; i < p.size(); ++i) norm += p(i) * p(i);
    CHECK(norm == Rational(1));
  }
  // the inverse stereographic image of u = (1,1,0,...) is the exact rational
  // point (-1/3, 2/3, 2/3, 0, ...) on the sphere
  {
    VecQ img = VecQ::Zero(7);
    img(0) = Rational(-1, 3);
    img(1) = Rational(2, 3);
    img(2) = Rational(2, 3);
    Rational norm(0);
    for (long i = 0; i < 7; ++i) norm += img(i) * img(i);
    CHECK(norm == Rational(1));
  }

  // tangent frames are exactly orthogonal to the base point
  for (int k : {1, 7, 23}) {
    auto frame = tangent_frame(pts[static_cast<std::size_t>(k)]);
    CHECK(frame.size() == 6);
    for (const auto& v : frame) {
      Rational dot(0);
      for (long i = 0; i < v.size(); ++i) dot += v(i) * pts[static_cast<std::size_t>(k)](i);
      CHECK(dot == Rational(0));
    }
  }
}

TEST_CASE("formal DGA engine") {
  // d(t^3 Omega) = 3 t^2 dt Omega + t^3 dOmega with a generic closed 2-form
  FormalDGA<Rational> dga({{"omega", 2}, {"beta", 3}}, true);
  dga.set_rule("omega", dga.gen("beta"));
  dga.set_rule("beta", dga.zero());
  dga.validate();
  auto omega = dga.gen("omega");
  auto lhs = dga.d(dga.times_t(omega, 3));
  FormalDGA<Rational>::Element dt;
  dt[FormalDGA<Rational>::Mono{dga.dt_id()}][0] = Rational(1);
  auto rhs = dga.add(dga.times_t(dga.scale(Rational(3), dga.wedge(dt, omega)), 2),
                     dga.times_t(dga.gen("beta"), 3));
  CHECK(dga.equal(lhs, rhs));

  // graded commutativity: omega ^ beta = beta ^ omega (even times odd)
  CHECK(dga.equal(dga.wedge(omega, dga.gen("beta")),
                  dga.wedge(dga.gen("beta"), omega)));

  // d(sigma ^ sigma) = 6 psi+ ^ sigma under d sigma = 3 psi+
  FormalDGA<Rational> nk({{"sigma", 2}, {"psip", 3}, {"psim", 3}}, false);
  nk.set_rule("sigma", nk.scale(Rational(3), nk.gen("psip")));
  nk.set_rule("psip", nk.zero());
  nk.set_rule("psim", nk.scale(Rational(-2), nk.wedge(nk.gen("sigma"), nk.gen("sigma"))));

  // d(sigma ^ sigma) = 6 psi+ ^ sigma by Leibniz, before any relation
  auto ss = nk.wedge(nk.gen("sigma"), nk.gen("sigma"));
  CHECK(nk.equal(nk.d_raw(ss),
                 nk.scale(Rational(6), nk.wedge(nk.gen("psip"), nk.gen("sigma")))));

  // d^2 psim = -12 sigma ^ psi+ only vanishes modulo the declared relation
  CHECK_THROWS_AS(nk.validate(), InvalidInputError);
  nk.add_relation({"sigma", "psip"});
  nk.validate();
  // d psi- = -2 sigma ^ sigma by the declared rule
  CHECK(nk.equal(nk.d(nk.gen("psim")), nk.scale(Rational(-2), ss)));

  // an inconsistent rule set fails the d^2 = 0 validation
  FormalDGA<Rational> bad({{"a", 1}, {"b", 2}}, false);
  bad.set_rule("a", bad.gen("b"));
  bad.set_rule("b", bad.wedge(bad.gen("a"), bad.gen("b")));
  CHECK_THROWS_AS(bad.validate(), InvalidInputError);

  CHECK_THROWS_AS(dga.gen("nonexistent"), InvalidInputError);
}

TEST_CASE("flag nearly-Kahler verification") {
  auto rep = flag_nearly_kahler_check();
  for (const auto& item : rep.items) {
    INFO(item.name, ": ", item.witness);
    CHECK(item.passed);
  }
  CHECK(rep.passed());
}

TEST_CASE("G2 cone verification, both modes") {
  for (auto mode : {G2ConeMode::formal_nk, G2ConeMode::flag_explicit}) {
    auto rep = g2_cone_check(mode);
    for (const auto& item : rep.items) {
      INFO(rep.check, " / ", item.name, ": ", item.witness);
      CHECK(item.passed);
    }
    CHECK(rep.passed());
  }
}

TEST_CASE("six-sphere nearly-Kahler verification") {
  auto rep = s6_nearly_kahler_check(60);
  for (const auto& item : rep.items) {
    INFO(item.name, ": ", item.witness);
    CHECK(item.passed);
  }
  CHECK(rep.passed());
}

TEST_CASE("seven-sphere nearly-parallel verification") {
  auto rep = s7_nearly_parallel_check(20);
  for (const auto& item : rep.items) {
    INFO(item.name, ": ", item.witness);
    CHECK(item.passed);
  }
  CHECK(rep.passed());
}

TEST_CASE("Spin(7) cone verification") {
  auto rep = spin7_cone_check();
  for (const auto& item : rep.items) {
    INFO(item.name, ": ", item.witness);
    CHECK(item.passed);
  }
  CHECK(rep.passed());
}

TEST_CASE("verify_all aggregates six reports") {
  auto all = verify_all();
  CHECK(all.size() == 6);
  for (const auto& rep : all) CHECK(rep.passed());
}
