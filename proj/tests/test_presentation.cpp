#include <catch2/catch_amalgamated.hpp>

#include "simpforge/models.hpp"
#include "simpforge/tensor.hpp"

using namespace simpforge;

namespace {
VarId tv(int j, int a = 1) { return VarId(Family::T, j, a); }
VarId uv(int j, int a = 1) { return VarId(Family::U, j, a); }
}  // namespace

TEST_CASE("k_A(m) presentation") {
    Workspace ws(4);
    auto P = ws.kA(2);
    CHECK(P->free_gens(0).empty());
    CHECK(P->free_gens(3) == std::vector<VarId>{tv(1), tv(2), tv(3)});
    REQUIRE(P->alias_value(3, tv(0)) != nullptr);
    CHECK(*P->alias_value(3, tv(0)) == Polynomial::pi(2));
    CHECK(*P->alias_value(3, tv(4)) == Polynomial());
    // d_0(t^(1)) = t^(0) = pi^m
    CHECK(P->apply_face(1, 0, Polynomial(tv(1))) == Polynomial::pi(2));
    // d_{p+1}-style boundary: d_1 at level 1 kills t^(1)
    CHECK(P->apply_face(1, 1, Polynomial(tv(1))) == Polynomial());
    auto r = check_presentation(*P, 4);
    INFO(r.str());
    CHECK(r.ok);
}

TEST_CASE("constant and bar presentations") {
    Workspace ws(4);
    CHECK(check_presentation(*ws.constant(), 4).ok);
    auto B = ws.bar_At();
    CHECK(B->free_gens(0) == std::vector<VarId>{tv(0)});
    CHECK(B->free_gens(2) == std::vector<VarId>{tv(0), tv(1), tv(2)});
    auto r = check_presentation(*B, 4);
    INFO(r.str());
    CHECK(r.ok);
}

TEST_CASE("K_A and relative tensor presentations") {
    Workspace ws(3);
    auto K = ws.K_A();
    CHECK(K->free_gens(1) == std::vector<VarId>{tv(1), uv(1)});
    CHECK(*K->alias_value(1, tv(0)) == Polynomial::pi());
    CHECK(*K->alias_value(1, uv(2)) == Polynomial());
    CHECK(check_presentation(*K, 3).ok);

    auto KK = ws.K_tensor_kA(2);
    // chains t_1, t_2, u_2 with u_1 == t_2
    CHECK(KK->free_gens(1) == std::vector<VarId>{tv(1, 1), tv(1, 2), uv(1, 2)});
    REQUIRE(KK->alias_value(1, uv(1, 1)) != nullptr);
    CHECK(*KK->alias_value(1, uv(1, 1)) == Polynomial(tv(1, 2)));
    CHECK(*KK->alias_value(1, uv(0, 1)) == Polynomial::pi());
    CHECK(check_presentation(*KK, 3).ok);

    CHECK(check_presentation(*ws.K_tensor_A(3), 3).ok);
    CHECK(check_presentation(*ws.K_tensor_A_kAe(2), 3).ok);
    CHECK(check_presentation(*ws.kA_quotient_of_K(3), 3).ok);
    CHECK(check_presentation(*ws.kA_quotient_all(2), 3).ok);
}

TEST_CASE("tensor_over_A") {
    Workspace ws(3);
    auto P = ws.kA(2);
    SECTION("square of k_A(2) matches the built-in") {
        auto T = std::make_shared<const SAlgPresentation>(tensor_over_A(*P, *P, "kA_tensor(2,2)", 1));
        CHECK(T->structure_equals(*ws.kA_tensor(2, 2), 3));
        CHECK(check_presentation(*T, 3).ok);
    }
    SECTION("unit of the tensor") {
        auto T = std::make_shared<const SAlgPresentation>(tensor_over_A(*P, *ws.constant(), "kA(2)x1", 0));
        CHECK(T->structure_equals(*P, 3));
    }
    SECTION("t/u relabeling gives K_A") {
        auto T = std::make_shared<const SAlgPresentation>(
            tensor_over_A(*ws.kA(1), *ws.kA(1), "K_A", relabel_identity(), relabel_family(Family::T, Family::U)));
        CHECK(T->structure_equals(*ws.K_A(), 3));
    }
    SECTION("collision is detected") {
        CHECK_THROWS_AS(tensor_over_A(*P, *P, "bad", 0), std::invalid_argument);
    }
}

TEST_CASE("simplex tensoring") {
    Workspace ws(3);
    SECTION("Delta^0 (x) P is P up to the label") {
        auto T = ws.simplex_tensored(0, ws.kA(2));
        CHECK(check_presentation(*T, 3).ok);
        for (int p = 0; p <= 3; ++p) CHECK(T->free_gens(p).size() == ws.kA(2)->free_gens(p).size());
    }
    SECTION("level-1 generator count of Delta^1 (x) k_A(2)") {
        auto T = ws.simplex_tensored(1, ws.kA(2));
        CHECK(T->free_gens(1).size() == 3);  // |Delta^1_1| = 3 labels, one free generator
        CHECK(check_presentation(*T, 3).ok);
    }
    SECTION("face acts on generator and label") {
        auto T = ws.simplex_tensored(1, ws.kA(2));
        MonotoneMap a01({0, 1}, 1);
        VarId g = with_label(tv(1), a01);
        // d_0: d_0(t^(1)) = pi^2, label becomes (1)
        CHECK(T->apply_face(1, 0, Polynomial(g)) == Polynomial::pi(2));
        // d_1: d_1(t^(1)) = t^(1) -> alias 0 at level 0
        CHECK(T->apply_face(1, 1, Polynomial(g)) == Polynomial());
    }
    SECTION("iterated tensoring carries two labels") {
        auto T = ws.simplex_tensored(1, ws.simplex_tensored(1, ws.kA(1)));
        CHECK(check_presentation(*T, 3).ok);
        CHECK(T->free_gens(1).size() == 9);  // 3 x 3 labels
    }
}

TEST_CASE("can maps") {
    Workspace ws(4);
    SECTION("assignment and certificates") {
        SAlgMorphism can = can_map(ws, 2, 1, 1);
        CHECK(can.image(1, tv(1)) == Polynomial::pi() * Polynomial(tv(1)));
        CHECK(certify_morphism(can, 4).ok);
        // alias consistency: t^(0) = pi^2 must land on pi^2
        CHECK(can.eval(2, *ws.kA(2)->alias_value(2, tv(0))) == Polynomial::pi(2));
    }
    SECTION("tensor version") {
        SAlgMorphism can = can_map(ws, 3, 1, 2);
        CHECK(can.image(1, tv(1, 2)) == Polynomial::pi(2) * Polynomial(tv(1, 2)));
        CHECK(certify_morphism(can, 3).ok);
    }
    SECTION("composition law can(3,2) then can(2,1) equals can(3,1)") {
        SAlgMorphism a = can_map(ws, 3, 2, 2);
        SAlgMorphism b = can_map(ws, 2, 1, 2);
        auto eq = morphisms_equal(compose(b, a), can_map(ws, 3, 1, 2), 4);
        INFO(eq.str());
        CHECK(eq.ok);
    }
    SECTION("identity is can(m,m)") {
        SAlgMorphism c = can_map(ws, 2, 2, 1);
        CHECK(morphisms_equal(c, identity_morphism(ws.kA(2), 4), 4).ok);
    }
    SECTION("corrupted assignment fails the degeneracy square") {
        auto dom = ws.kA(2);
        auto cod = ws.kA(1);
        SAlgMorphism bad = SAlgMorphism::from_rule("bad-can", dom, cod, 4, [](int, const VarId& g) {
            return Polynomial::pi() * Polynomial(g) + Polynomial(1);
        });
        CHECK_FALSE(certify_morphism(bad, 4).ok);
    }
}

TEST_CASE("morphism evaluation errors") {
    Workspace ws(2);
    SAlgMorphism id = identity_morphism(ws.kA(1), 2);
    CHECK_THROWS_AS(id.eval(1, Polynomial(tv(5))), std::invalid_argument);
}

TEST_CASE("vertex restriction of a label-independent morphism") {
    Workspace ws(3);
    auto P = ws.kA(2);
    auto T = ws.simplex_tensored(2, P);
    // The label-collapsing morphism Delta^2 (x) P -> P.
    SAlgMorphism collapse = SAlgMorphism::from_rule("collapse", T, P, 3, [](int, const VarId& g) {
        VarId h = g;
        h.labels.clear();
        return Polynomial(h);
    });
    CHECK(certify_morphism(collapse, 3).ok);
    for (int v = 0; v <= 2; ++v) {
        SAlgMorphism rv = vertex_restriction(collapse, 2, v, P);
        CHECK(morphisms_equal(rv, identity_morphism(P, 3), 3).ok);
    }
}

TEST_CASE("rho actions") {
    Workspace ws(3);
    SECTION("cycle table") {
        CHECK(rho_cycle(3, 1, 1) == 2);
        CHECK(rho_cycle(3, 1, 3) == 1);
        CHECK(rho_cycle(4, 0, 2) == 2);
        CHECK(varrho(3, 0) == 1);
        CHECK(varrho(3, 3) == 1);
        CHECK(varrho(3, 2) == 3);
    }
    SECTION("action on generators and order") {
        auto M = ws.kA_tensor(3, 1);
        SAlgMorphism r1 = rho_action(ws, 3, 1, M);
        CHECK(r1.image(1, tv(1, 1)) == Polynomial(tv(1, 2)));
        CHECK(r1.image(1, tv(1, 3)) == Polynomial(tv(1, 1)));
        CHECK(certify_morphism(r1, 3).ok);
        SAlgMorphism r = r1;
        for (int k = 1; k < 3; ++k) {
            CHECK_FALSE(morphisms_equal(r, identity_morphism(M, 3), 3).ok);
            r = compose(r1, r);
        }
        CHECK(morphisms_equal(r, identity_morphism(M, 3), 3).ok);
    }
    SECTION("b = 0 is the identity") {
        auto M = ws.K_tensor_A(2);
        CHECK(morphisms_equal(rho_action(ws, 2, 0, M), identity_morphism(M, 3), 3).ok);
    }
}
