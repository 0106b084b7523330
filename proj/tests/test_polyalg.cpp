#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "wicksos/expr.hpp"
#include "wicksos/poly.hpp"

using namespace wicksos;
using namespace wicksos::testutil;

namespace {

GMatrix identity(int n) {
    std::size_t d = (std::size_t)n + 1;
    GMatrix m(d, std::vector<GaussRat>(d));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = GaussRat(1);
    return m;
}

}  // namespace

TEST_CASE("pointwise product basics") {
    Poly z0 = Poly::variable(1, 0), zb0 = Poly::covariable(1, 0);
    CHECK(poly_str(z0 * zb0) == "z0*zb0");
    Poly j = momentum_map(1);
    CHECK(j * j == parse_poly("z0^2*zb0^2 + 2*z0*z1*zb0*zb1 + z1^2*zb1^2", 1));
    Rng rng(21);
    Poly f = rand_poly(rng, 2, 6, 3);
    CHECK(f * Poly::constant(2, GaussRat(1)) == f);

    // cross-check the squared momentum map by evaluation
    for (int i = 0; i < 5; ++i) {
        std::vector<GaussRat> w{rand_gauss(rng), rand_gauss(rng)};
        GaussRat jj = (j * j).evaluate(w);
        GaussRat jv = j.evaluate(w);
        CHECK(jj == jv * jv);
    }
}

TEST_CASE("ring axioms on random samples") {
    Rng rng(22);
    for (int rep = 0; rep < 15; ++rep) {
        Poly a = rand_poly(rng, 1, 4, 4), b = rand_poly(rng, 1, 4, 4), c = rand_poly(rng, 1, 4, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Poly(1));
    }
}

TEST_CASE("grading is a complete idempotent decomposition") {
    Rng rng(23);
    Poly j3 = momentum_map(1) + Poly::constant(1, GaussRat(3));
    CHECK(j3.grade(1, 1) == momentum_map(1));
    CHECK(j3.grade(0, 0) == Poly::constant(1, GaussRat(3)));
    Poly m = parse_poly("z0^2*zb1", 1);
    CHECK(m.grade(2, 1) == m);
    for (int rep = 0; rep < 10; ++rep) {
        Poly f = rand_poly(rng, 2, 8, 4);
        Poly sum(2);
        for (unsigned k = 0; k <= 4; ++k)
            for (unsigned l = 0; l <= 4; ++l) {
                Poly g = f.grade(k, l);
                CHECK(g.grade(k, l) == g);
                sum += g;
            }
        CHECK(sum == f);
    }
}

TEST_CASE("momentum map") {
    CHECK(poly_str(momentum_map(1)) == "z0*zb0 + z1*zb1");
    CHECK(poly_str(momentum_map(2)) == "z0*zb0 + z1*zb1 + z2*zb2");
    std::vector<GaussRat> w{GaussRat(1), GaussRat::i()};
    CHECK(momentum_map(1).evaluate(w) == GaussRat(2));
}

TEST_CASE("linear substitution action") {
    Poly z0 = Poly::variable(1, 0);
    CHECK(z0.act(identity(1)) == z0);
    GMatrix swap(2, std::vector<GaussRat>(2));
    swap[0][1] = GaussRat(1);
    swap[1][0] = GaussRat(1);
    CHECK(z0.act(swap) == Poly::variable(1, 1));

    // diagonal phases fix the momentum map
    GMatrix phase = identity(1);
    phase[0][0] = GaussRat::i();
    CHECK(is_unitary(phase));
    CHECK(momentum_map(1).act(phase) == momentum_map(1));

    Rng rng(24);
    for (int rep = 0; rep < 10; ++rep) {
        Poly f = rand_poly(rng, 1, 3, 3), g = rand_poly(rng, 1, 3, 3);
        GMatrix m(2, {rand_gauss(rng), rand_gauss(rng)});
        m[1] = {rand_gauss(rng), rand_gauss(rng)};
        GMatrix nn(2, {rand_gauss(rng), rand_gauss(rng)});
        nn[1] = {rand_gauss(rng), rand_gauss(rng)};
        CHECK((f * g).act(m) == f.act(m) * g.act(m));
        // iterated substitution composes on the inside
        CHECK(f.act(m).act(nn) == f.act(matmul(m, nn)));
        // bidegrees are preserved
        CHECK(f.act(m).grade(2, 1) == f.grade(2, 1).act(m));
    }
}

TEST_CASE("degree imbalance derivation and invariance") {
    Poly m = parse_poly("z0^2*zb1", 1);
    CHECK(m.deg_hol_minus_antihol() == m);
    CHECK(momentum_map(2).deg_hol_minus_antihol() == Poly(2));
    Poly zb0 = Poly::covariable(1, 0);
    CHECK(zb0.deg_hol_minus_antihol() == -zb0);

    CHECK(momentum_map(1).pow_ptwise(3).is_invariant());
    CHECK(!Poly::variable(1, 0).is_invariant());
    CHECK(parse_poly("z0^2*zb1*zb2", 2).is_invariant());

    Rng rng(25);
    for (int rep = 0; rep < 10; ++rep) {
        Poly f = rand_poly(rng, 1, 5, 3);
        CHECK(f.is_invariant() == (f.deg_hol_minus_antihol() == Poly(1)));
    }
}

TEST_CASE("conjugation is an antilinear involution compatible with products") {
    Rng rng(26);
    for (int rep = 0; rep < 10; ++rep) {
        Poly f = rand_poly(rng, 1, 4, 3), g = rand_poly(rng, 1, 4, 3);
        CHECK(f.conj().conj() == f);
        CHECK((f * g).conj() == f.conj() * g.conj());
        for (int pt = 0; pt < 2; ++pt) {
            std::vector<GaussRat> w{rand_gauss(rng), rand_gauss(rng)};
            CHECK(f.conj().evaluate(w) == f.evaluate(w).conj());
        }
    }
}

TEST_CASE("evaluation") {
    CHECK(parse_poly("z0*zb0", 1).evaluate({GaussRat(2), GaussRat(0)}) == GaussRat(4));
    CHECK(momentum_map(1).evaluate({GaussRat(Rat(3, 5)), GaussRat(Rat(4, 5))}) == GaussRat(1));
}

TEST_CASE("homogenized Motzkin-type fixture evaluates correctly") {
    // -(1/16)(z0^2 zb1^2 - zb0^2 z1^2)^2 (|z0|^2|z1|^2 - 3|z1|^4) + |z1|^12
    std::string motzkin =
        "0 - ((1/16)*(z0^2*zb1^2 - zb0^2*z1^2)^2*(z0*zb0*z1*zb1 - 3*z1^2*zb1^2)) "
        "+ z1^6*zb1^6";
    Poly f = parse_poly(motzkin, 2);
    CHECK(f.is_invariant());
    CHECK(f.is_hermitian());
    // at (x+iy, 1, 1) the value is x^2 y^2 (x^2 + y^2 - 3) + 1
    GaussRat v = f.evaluate({GaussRat(Rat(1), Rat(1)), GaussRat(1), GaussRat(1)});
    CHECK(v == GaussRat(0));
    Rng rng(27);
    for (int rep = 0; rep < 10; ++rep) {
        Rat x = rand_rat(rng, 3, 2), y = rand_rat(rng, 3, 2);
        GaussRat w = f.evaluate({GaussRat(x, y), GaussRat(1), GaussRat(1)});
        Rat expect = x * x * y * y * (x * x + y * y - Rat(3)) + Rat(1);
        CHECK(w == GaussRat(expect));
    }
}

TEST_CASE("expression parser round trip and errors") {
    Rng rng(28);
    for (int rep = 0; rep < 100; ++rep) {
        Poly f = rand_poly(rng, 2, 6, 4);
        CHECK(parse_poly(poly_str(f), 2) == f);
    }
    CHECK(parse_poly("(3/2)*z0^2*zb0^2 - J + i*z1*zb0", 1) ==
          GaussRat(Rat(3, 2)) * parse_poly("z0^2*zb0^2", 1) - momentum_map(1) +
              GaussRat::i() * parse_poly("z1*zb0", 1));
    CHECK(parse_poly(" z0 \t* zb0 ", 1) == parse_poly("z0*zb0", 1));
    CHECK_THROWS_AS(parse_poly("z3", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("1.5*z0", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("z0 +", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("q0", 1), ParseError);
    try {
        parse_poly("z0 + 1.5", 1);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos() == 8);
    }
}

TEST_CASE("canonical print order is degree-major") {
    CHECK(poly_str(parse_poly("1 + z0*zb0", 1)) == "z0*zb0 + 1");
    CHECK(poly_str(parse_poly("zb0 - z0", 1)) == "-z0 + zb0");  // K-lex within a degree
    CHECK(poly_str(Poly(1)) == "0");
}
