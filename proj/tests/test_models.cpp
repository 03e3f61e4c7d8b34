#include <catch2/catch_amalgamated.hpp>

#include "simpforge/models.hpp"

using namespace simpforge;

namespace {
VarId tv(int j, int a = 1) { return VarId(Family::T, j, a); }
VarId uv(int j, int a = 1) { return VarId(Family::U, j, a); }
}  // namespace

TEST_CASE("model id parsing") {
    CHECK(parse_model_id("kA(3)")->str() == "kA(3)");
    CHECK(parse_model_id("kA_tensor(2,3)")->str() == "kA_tensor(2,3)");
    CHECK(parse_model_id("K_A")->str() == "K_A");
    CHECK(parse_model_id("K_A_tensor_kA(4)")->str() == "K_A_tensor_kA(4)");
    CHECK(parse_model_id("kA_quotient_of_K(2)")->str() == "kA_quotient_of_K(2)");
    CHECK(!parse_model_id("nonsense(1)").has_value());
}

TEST_CASE("every built-in model passes certification") {
    Workspace ws(4);
    std::vector<std::string> ids = {"BarAtA",
                                    "kA(1)",
                                    "kA(4)",
                                    "kA_tensor(3,2)",
                                    "K_A",
                                    "K_A_tensor_A(3)",
                                    "K_A_tensor_kA(4)",
                                    "K_A_tensor_A_kAe(3)",
                                    "kA_quotient_of_K(4)"};
    for (auto& id : ids) {
        auto mid = parse_model_id(id);
        REQUIRE(mid.has_value());
        auto P = ws.by_id(*mid);
        auto r = check_presentation(*P, 4);
        INFO(id << ": " << r.str());
        CHECK(r.ok);
    }
}

TEST_CASE("zeta") {
    Workspace ws(3);
    SECTION("n = 1 is the identity") {
        SAlgMorphism z = zeta_K_level(ws, 1);
        CHECK(morphisms_equal(z, identity_morphism(ws.K_A(), 3), 3).ok);
    }
    SECTION("n = 2 swaps the even slots and squares to the identity") {
        SAlgMorphism z = zeta_K_level(ws, 2);
        CHECK(z.image(1, uv(1, 1)) == Polynomial(uv(1, 2)));
        CHECK(z.image(1, uv(1, 2)) == Polynomial(uv(1, 1)));
        CHECK(z.image(1, tv(1, 2)) == Polynomial(tv(1, 2)));
        CHECK(morphisms_equal(compose(z, z), identity_morphism(ws.K_tensor_A(2), 3), 3).ok);
    }
    SECTION("order is exactly n") {
        for (int n = 2; n <= 4; ++n) {
            Workspace w2(2);
            SAlgMorphism z = zeta_K_level(w2, n);
            SAlgMorphism acc = z;
            for (int k = 1; k < n; ++k) {
                CHECK_FALSE(morphisms_equal(acc, identity_morphism(w2.K_tensor_A(n), 2), 2).ok);
                acc = compose(z, acc);
            }
            CHECK(morphisms_equal(acc, identity_morphism(w2.K_tensor_A(n), 2), 2).ok);
        }
    }
    SECTION("descent square commutes") {
        for (int n = 2; n <= 3; ++n) {
            SAlgMorphism top = zeta_lift(ws, n);
            SAlgMorphism bottom = zeta_quotient(ws, n);
            CHECK(certify_morphism(top, 3).ok);
            CHECK(certify_morphism(bottom, 3).ok);
            SAlgMorphism q_dom = quotient_morphism(ws.K_tensor_kA(n), ws.kA_quotient_of_K(n), 3);
            SAlgMorphism q_cod = quotient_morphism(ws.K_tensor_A_kAe(n - 1), ws.kA_quotient_all(n), 3);
            auto eq = morphisms_equal(compose(bottom, q_dom), compose(q_cod, top), 3);
            INFO(eq.str());
            CHECK(eq.ok);
        }
    }
}

TEST_CASE("skip morphisms") {
    Workspace ws(3);
    SECTION("documented instance c=2, r=0 on the covering") {
        SAlgMorphism f = f_tilde(ws, 2, 0);
        CHECK(f.image(1, tv(1, 1)) == Polynomial(tv(1, 1)));
        CHECK(f.image(1, tv(1, 2)) == Polynomial(tv(1, 3)));
        CHECK(f.image(1, uv(1, 2)) == Polynomial(uv(1, 3)));
        // u_1 == t_2 maps consistently: u-rule sends u_1 to u_2 == t_3.
        CHECK(ws.K_tensor_kA(3)->normalize(1, f.raw_image(1, uv(1, 1))) == Polynomial(tv(1, 3)));
        CHECK(certify_morphism(f, 3).ok);
    }
    SECTION("all covering skips certify") {
        for (int c = 1; c <= 3; ++c)
            for (int r = 0; r <= c; ++r) {
                auto rf = certify_morphism(f_tilde(ws, c, r), 3);
                INFO("f~ c=" << c << " r=" << r << ": " << rf.str());
                CHECK(rf.ok);
                auto rg = certify_morphism(g_tilde(ws, c, r), 3);
                INFO("g~ c=" << c << " r=" << r << ": " << rg.str());
                CHECK(rg.ok);
            }
    }
    SECTION("induced quotient skips certify") {
        for (int c = 1; c <= 3; ++c)
            for (int r = 0; r <= c; ++r) {
                CHECK(certify_morphism(f_skip(ws, c, r), 3).ok);
                CHECK(certify_morphism(g_skip(ws, c, r), 3).ok);
            }
    }
    SECTION("r = 0 and r = c agree") {
        for (int c = 1; c <= 3; ++c) {
            CHECK(morphisms_equal(f_skip(ws, c, 0), f_skip(ws, c, c), 3).ok);
            CHECK(morphisms_equal(g_skip(ws, c, 0), g_skip(ws, c, c), 3).ok);
        }
    }
    SECTION("descent squares for the induced skips") {
        for (int c = 1; c <= 3; ++c)
            for (int r = 0; r <= c; ++r) {
                SAlgMorphism qf_dom = quotient_morphism(ws.K_tensor_kA(c), ws.kA_quotient_of_K(c), 3);
                SAlgMorphism qf_cod = quotient_morphism(ws.K_tensor_kA(c + 1), ws.kA_quotient_of_K(c + 1), 3);
                auto eqf = morphisms_equal(compose(f_skip(ws, c, r), qf_dom), compose(qf_cod, f_tilde(ws, c, r)), 3);
                INFO("f c=" << c << " r=" << r << ": " << eqf.str());
                CHECK(eqf.ok);
                SAlgMorphism qg_dom = quotient_morphism(ws.K_tensor_A_kAe(c - 1), ws.kA_quotient_all(c), 3);
                SAlgMorphism qg_cod = quotient_morphism(ws.K_tensor_A_kAe(c), ws.kA_quotient_all(c + 1), 3);
                auto eqg = morphisms_equal(compose(g_skip(ws, c, r), qg_dom), compose(qg_cod, g_tilde(ws, c, r)), 3);
                INFO("g c=" << c << " r=" << r << ": " << eqg.str());
                CHECK(eqg.ok);
            }
    }
    SECTION("mutated u-rule threshold breaks the alias certificate") {
        Workspace bad(3, Mutation::skip_threshold);
        bool tripped = false;
        for (int c = 1; c <= 2 && !tripped; ++c)
            for (int r = 0; r <= c && !tripped; ++r)
                if (!certify_morphism(f_tilde(bad, c, r), 3).ok) tripped = true;
        CHECK(tripped);
    }
}

TEST_CASE("skip composites") {
    Workspace ws(3);
    SECTION("empty composite is the identity") {
        DVector d;
        SAlgMorphism m = skip_composite_direct(ws, SkipFlavor::F, 2, 2, d);
        CHECK(morphisms_equal(m, identity_morphism(ws.kA_tensor(2, 1), 3), 3).ok);
    }
    SECTION("two-step unfolding") {
        DVector d;
        d.entries[1] = 0;
        d.entries[2] = 1;
        SAlgMorphism lhs = skip_composite_direct(ws, SkipFlavor::F, 1, 3, d);
        SAlgMorphism rhs = compose(f_skip_direct(ws, 2, 1), f_skip_direct(ws, 1, 0));
        CHECK(morphisms_equal(lhs, rhs, 3).ok);
    }
    SECTION("zeta conjugation: lemma and corollary squares") {
        for (int c = 1; c <= 3; ++c)
            for (int r = 0; r <= c; ++r) {
                SAlgMorphism lhs = compose(zeta_quotient(ws, c + 1), f_skip(ws, c, r));
                SAlgMorphism rhs = compose(g_skip(ws, c, r), zeta_quotient(ws, c));
                auto eq = morphisms_equal(lhs, rhs, 3);
                INFO("c=" << c << " r=" << r << ": " << eq.str());
                CHECK(eq.ok);
            }
        for (int a = 1; a <= 2; ++a)
            for (int b = a + 1; b <= 3; ++b)
                for (auto& d : enumerate_dvectors(a, b - 1)) {
                    SAlgMorphism lhs =
                        compose(zeta_quotient(ws, b), skip_composite_quotient(ws, SkipFlavor::F, a, b, d));
                    SAlgMorphism rhs =
                        compose(skip_composite_quotient(ws, SkipFlavor::G, a, b, d), zeta_quotient(ws, a));
                    auto eq = morphisms_equal(lhs, rhs, 3);
                    INFO("a=" << a << " b=" << b << " d=" << d.str() << ": " << eq.str());
                    CHECK(eq.ok);
                }
    }
}

TEST_CASE("auxiliary maps and their squares") {
    Workspace ws(3);
    const int pm = 3;
    for (int c = 1; c <= 3; ++c) {
        DYNAMIC_SECTION("f-diagram, r < c, c=" << c) {
            for (int r = 0; r <= c - 1; ++r) {
                SAlgMorphism ft = f_theta(ws, c, r);
                CHECK(certify_morphism(ft, pm).ok);
                SAlgMorphism down_mid = quotient_morphism(ws.quot_f(c, r), ws.K_tensor_kA(c + 1), pm);
                SAlgMorphism down_right = quotient_morphism(ws.K_tensor_A(c), ws.K_tensor_kA(c), pm);
                auto eq = morphisms_equal(compose(down_mid, ft), compose(f_tilde(ws, c, r), down_right), pm);
                INFO("c=" << c << " r=" << r << ": " << eq.str());
                CHECK(eq.ok);
            }
        }
        DYNAMIC_SECTION("f-diagram, r = c, c=" << c) {
            SAlgMorphism th = vartheta_map(ws, c);
            SAlgMorphism ps = psi_map(ws, c);
            SAlgMorphism ph = phi_map(ws, c);
            SAlgMorphism phinv = phi_inverse(ws, c);
            CHECK(certify_morphism(th, pm).ok);
            CHECK(certify_morphism(ps, pm).ok);
            CHECK(certify_morphism(ph, pm).ok);
            CHECK(certify_morphism(phinv, pm).ok);
            CHECK(morphisms_equal(compose(ph, phinv), identity_morphism(ws.K_tensor_kA(c + 1), pm), pm).ok);
            CHECK(morphisms_equal(compose(phinv, ph), identity_morphism(ws.quot_q2(c), pm), pm).ok);
            SAlgMorphism qdown = quotient_morphism(ws.quot_q1(c), ws.quot_q2(c), pm);
            SAlgMorphism rdown = quotient_morphism(ws.K_tensor_A(c), ws.K_tensor_kA(c), pm);
            CHECK(morphisms_equal(compose(qdown, th), compose(ps, rdown), pm).ok);
            CHECK(morphisms_equal(compose(ph, ps), f_tilde(ws, c, c), pm).ok);
        }
        DYNAMIC_SECTION("g-diagram, r < c, c=" << c) {
            for (int r = 0; r <= c - 1; ++r) {
                SAlgMorphism gt = g_theta(ws, c, r);
                CHECK(certify_morphism(gt, pm).ok);
                SAlgMorphism down_mid = quotient_morphism(ws.quot_g(c, r), ws.K_tensor_A_kAe(c), pm);
                SAlgMorphism down_right = quotient_morphism(ws.K_tensor_A(c), ws.K_tensor_A_kAe(c - 1), pm);
                auto eq = morphisms_equal(compose(down_mid, gt), compose(g_tilde(ws, c, r), down_right), pm);
                INFO("c=" << c << " r=" << r << ": " << eq.str());
                CHECK(eq.ok);
            }
        }
        DYNAMIC_SECTION("g-diagram, r = c, c=" << c) {
            SAlgMorphism om = omega_map(ws, c);
            SAlgMorphism ga = gamma_map(ws, c);
            SAlgMorphism up = upsilon_map(ws, c);
            SAlgMorphism upinv = upsilon_inverse(ws, c);
            SAlgMorphism ta = tau_map(ws, c);
            CHECK(certify_morphism(om, pm).ok);
            CHECK(certify_morphism(ga, pm).ok);
            CHECK(certify_morphism(up, pm).ok);
            CHECK(certify_morphism(upinv, pm).ok);
            CHECK(certify_morphism(ta, pm).ok);
            CHECK(morphisms_equal(compose(up, upinv), identity_morphism(ws.K_tensor_A_kAe(c), pm), pm).ok);
            CHECK(morphisms_equal(compose(upinv, up), identity_morphism(ws.quot_q2p(c), pm), pm).ok);
            SAlgMorphism qdown = quotient_morphism(ws.quot_q1p(c), ws.quot_q2p(c), pm);
            SAlgMorphism rdown = quotient_morphism(ws.K_tensor_A(c), ws.kAc_tensor_K(c - 1), pm);
            CHECK(morphisms_equal(compose(qdown, om), compose(ga, rdown), pm).ok);
            CHECK(morphisms_equal(compose(up, ta), rho_bridge(ws, c + 1), pm).ok);
            SAlgMorphism rho_c = rho_bridge(ws, c);
            auto eq = morphisms_equal(compose(g_tilde(ws, c, c), rho_c), compose(up, ga), pm);
            INFO(eq.str());
            CHECK(eq.ok);
        }
    }
}
