#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "simpforge/poly.hpp"

using namespace simpforge;

namespace {

VarId tvar(int j, int a = 1) { return VarId(Family::T, j, a); }
VarId uvar(int j, int a = 1) { return VarId(Family::U, j, a); }

Polynomial t(int j, int a = 1) { return Polynomial(tvar(j, a)); }

// Small random polynomials over a fixed variable pool; deterministic seed.
struct PolyGen {
    std::mt19937 rng;
    explicit PolyGen(unsigned seed) : rng(seed) {}

    int small(int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); }

    Polynomial operator()() {
        Polynomial p;
        int terms = small(0, 4);
        for (int k = 0; k < terms; ++k) {
            Monomial m(small(0, 2));
            int nvars = small(0, 2);
            for (int v = 0; v < nvars; ++v) {
                VarId var = (small(0, 1) ? tvar(small(0, 2), small(1, 2)) : uvar(small(0, 2), small(1, 2)));
                m.var_exponents[var] += small(1, 2);
            }
            p.add_term(m, small(-3, 3));
        }
        return p;
    }
};

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    Polynomial pi = Polynomial::pi();
    CHECK(poly_arith(pi + t(1), pi - t(1), PolyOp::mul) == pi * pi - t(1) * t(1));
    PolyGen gen(7);
    Polynomial p = gen();
    CHECK(poly_arith(p, Polynomial(), PolyOp::add) == p);
    CHECK(poly_arith(pi * t(1, 1), pi * t(1, 1), PolyOp::sub).is_zero());
}

TEST_CASE("ring axioms on random small polynomials") {
    PolyGen gen(42);
    for (int it = 0; it < 200; ++it) {
        Polynomial p = gen(), q = gen(), r = gen();
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("substitution") {
    SECTION("simultaneous substitution") {
        std::map<VarId, Polynomial> sub;
        sub[tvar(1, 1)] = Polynomial::pi() * t(1, 1);
        sub[tvar(1, 2)] = Polynomial::pi() * t(1, 2);
        Polynomial p = t(1, 1) * t(1, 2);
        CHECK(substitute(p, sub) == Polynomial::pi(2) * t(1, 1) * t(1, 2));
    }
    SECTION("empty substitution is the identity") {
        PolyGen gen(3);
        Polynomial p = gen();
        CHECK(substitute(p, {}) == p);
    }
    SECTION("swap symmetry") {
        std::map<VarId, Polynomial> swap;
        swap[tvar(1)] = t(2);
        swap[tvar(2)] = t(1);
        Polynomial p = t(1) + t(2);
        CHECK(substitute(p, swap) == p);
    }
    SECTION("respects ring structure") {
        PolyGen gen(11);
        for (int it = 0; it < 100; ++it) {
            Polynomial p = gen(), q = gen();
            std::map<VarId, Polynomial> sub;
            sub[tvar(0, 1)] = gen();
            sub[uvar(1, 2)] = gen();
            CHECK(substitute(p * q, sub) == substitute(p, sub) * substitute(q, sub));
            CHECK(substitute(p + q, sub) == substitute(p, sub) + substitute(q, sub));
        }
    }
    SECTION("composition law") {
        PolyGen gen(23);
        for (int it = 0; it < 100; ++it) {
            Polynomial p = gen();
            std::map<VarId, Polynomial> s1, s2;
            s1[tvar(1, 1)] = gen();
            s1[tvar(2, 1)] = gen();
            s2[uvar(0, 1)] = gen();
            s2[tvar(1, 2)] = gen();
            // tau o sigma applies tau inside sigma's images, and tau on
            // variables sigma leaves fixed.
            std::map<VarId, Polynomial> comp = s2;
            for (auto& [v, img] : s1) comp[v] = substitute(img, s2);
            CHECK(substitute(substitute(p, s1), s2) == substitute(p, comp));
        }
    }
}

TEST_CASE("pi specialization") {
    Polynomial pi = Polynomial::pi();
    CHECK(specialize_pi(pi * pi + t(1), 0) == t(1));
    CHECK(specialize_pi(pi * t(1) - Int(2) * t(1), 2).is_zero());
    CHECK(specialize_pi(t(1) * (pi - t(1)), 0) == -(t(1) * t(1)));
}

TEST_CASE("monomial weight") {
    Monomial pi3(3);
    CHECK(weight(pi3, 1) == 3);
    CHECK(weight(pi3, 5) == 3);
    Monomial tt;
    tt.var_exponents[tvar(1)] = 1;
    tt.var_exponents[tvar(2)] = 1;
    CHECK(weight(tt, 2) == 4);
    Monomial pit(1);
    pit.var_exponents[tvar(1)] = 1;
    CHECK(weight(pit, 3) == 4);
    CHECK((Polynomial::pi(2) + t(1)).weight_homogeneous(2));
    CHECK_FALSE((Polynomial::pi() + t(1)).weight_homogeneous(2));
}

TEST_CASE("canonical text form round-trips") {
    SECTION("the documented sample parses") {
        Polynomial p = parse_polynomial("3*pi^2*t[1,2](a=(0,0,1)) - u[2,1]");
        VarId labeled(Family::T, 1, 2, {MonotoneMap({0, 0, 1}, 1)});
        Polynomial expect = Int(3) * Polynomial::pi(2) * Polynomial(labeled) - Polynomial(uvar(2, 1));
        CHECK(p == expect);
    }
    SECTION("print then parse is the identity") {
        PolyGen gen(99);
        for (int it = 0; it < 200; ++it) {
            Polynomial p = gen();
            CHECK(parse_polynomial(p.str()) == p);
        }
    }
    SECTION("labels survive the round trip") {
        VarId v(Family::T, 2, 3, {MonotoneMap({0, 2}, 3), MonotoneMap({1, 1, 1}, 2)});
        Polynomial p = Int(-5) * Polynomial(v) * Polynomial::pi() + Polynomial(1);
        CHECK(parse_polynomial(p.str()) == p);
        CHECK(p.str() == parse_polynomial(p.str()).str());
    }
}

TEST_CASE("divisibility by pi") {
    CHECK((Polynomial::pi() * t(1) + Polynomial::pi(3)).divisible_by_pi());
    CHECK_FALSE((Polynomial::pi() + t(1)).divisible_by_pi());
    CHECK(Polynomial().divisible_by_pi());
}
