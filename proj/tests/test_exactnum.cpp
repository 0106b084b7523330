#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "wicksos/rational.hpp"

using namespace wicksos;
using namespace wicksos::testutil;

TEST_CASE("rationals normalize and round-trip") {
    CHECK(Rat(4, 6) == Rat(2, 3));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(-1, 2).str() == "-1/2");
    CHECK(Rat(7).str() == "7");
    CHECK(Rat::parse("-12/8") == Rat(-3, 2));
    CHECK(Rat::parse("42") == Rat(42));
    CHECK_THROWS(Rat::parse("1/0"));
    CHECK_THROWS(Rat::parse("1.5"));
    CHECK_THROWS(Rat::parse(""));

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Rat r = rand_rat(rng, 1000, 1000);
        CHECK(Rat::parse(r.str()) == r);
    }
}

TEST_CASE("gaussian rationals are an exact field") {
    GaussRat a(Rat(1, 2), Rat(-3, 4));
    GaussRat b(Rat(2, 3), Rat(5));
    CHECK((a * b) / b == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).im().is_zero());
    CHECK(a.norm2() >= Rat(0));
    CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));

    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        GaussRat g = rand_gauss(rng, 50, 20);
        CHECK(GaussRat::parse(g.str()) == g);
    }
    CHECK(GaussRat::parse("i") == GaussRat::i());
    CHECK(GaussRat::parse("-i") == -GaussRat::i());
    CHECK(GaussRat::parse("3/2-1/2*i") == GaussRat(Rat(3, 2), Rat(-1, 2)));
}

TEST_CASE("falling factorial basics") {
    Rng rng(13);
    for (int i = 0; i < 10; ++i) CHECK(falling(rand_rat(rng), 0) == Rat(1));
    CHECK(falling(Rat(1, 2), 2) == Rat(-1, 4));
    CHECK(falling(Rat(5), 2) == Rat(20));
}

TEST_CASE("binomials") {
    CHECK(binom(4, 2) == Rat(6));
    CHECK(binom(2, 5) == Rat(0));
    CHECK(binom(2 + 3, 3) == Rat(10));  // level dimension binom(n+k, k) at n=2, k=3
}

TEST_CASE("vandermonde identity for falling factorials") {
    Rng rng(14);
    for (int rep = 0; rep < 20; ++rep) {
        Rat x = rand_rat(rng), y = rand_rat(rng);
        for (unsigned k = 0; k <= 8; ++k) {
            Rat sum(0);
            for (unsigned t = 0; t <= k; ++t)
                sum += binom(k, t) * falling(x, t) * falling(y, k - t);
            CHECK(falling(x + y, k) == sum);
        }
    }
}

TEST_CASE("falling factorial summation identity") {
    Rng rng(15);
    for (int rep = 0; rep < 20; ++rep) {
        Rat z = rand_rat(rng);
        for (unsigned n = 0; n <= 3; ++n) {
            for (unsigned k = 0; k <= 6; ++k) {
                Rat lhs(0);
                for (unsigned t = 0; t <= k; ++t)
                    lhs += binom(k, t) * falling(z, 2 * k - t) / factorial(2 * k - t + n);
                Rat rhs = falling(z, k) * falling(z + Rat((long)(k + n)), k) /
                          factorial(2 * k + n);
                CHECK(lhs == rhs);
            }
        }
    }
}
