#pragma once
// The named simplicial algebras and their structural morphisms. Every model
// in scope is a collection of generator chains with boundary aliases, so one
// chain-scheme builder covers all of them:
//
//   Bar_{A[t]}(A)          chain t, free range j = 0..p, top alias 0
//   k_A(m)                 chain t, t^(0) = pi^m, t^(p+1) = 0
//   k_A^{(x)n}(m)          chains t_1..t_n
//   K_A^{(x)n}             chains t_a, u_a with t/u^(0) = pi
//   K_A^{(x)_{k_A} c}      K_A^{(x)c} with u_a == t_{a+1} for a < c
//   K_A (x) k_A^{(x)e}     K_A^{(x)(e+1)} with u_a == t_a for a >= 2
//   quotient presentations of k_A^{(x)c} used by the skip morphisms
//
// Induced quotient morphisms are computed by lift-apply-project: the shared
// generator names make lifting trivial and the codomain aliases perform the
// projection during normalization.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "simpforge/morphism.hpp"
#include "simpforge/tensor.hpp"

namespace simpforge {

enum class Mutation {
    none,
    t_exponent,        // pi^{n-m-k} in the scaling factor becomes pi^{n-m-k+1}
    rho_square,        // the cyclic rotation in the coherent homotopy is squared
    drop_summand,      // the r = 1 summand of the coherent homotopy is dropped
    skip_threshold,    // the u-rule threshold of the skip morphisms is off by one
    t_domain_reading,  // scaling-factor variables read with t^(0) = pi^{n+2} aliases
};

inline const char* mutation_name(Mutation m) {
    switch (m) {
        case Mutation::none: return "none";
        case Mutation::t_exponent: return "t_exponent";
        case Mutation::rho_square: return "rho_square";
        case Mutation::drop_summand: return "drop_summand";
        case Mutation::skip_threshold: return "skip_threshold";
        case Mutation::t_domain_reading: return "t_domain_reading";
    }
    return "?";
}

inline std::optional<Mutation> mutation_from_name(const std::string& s) {
    for (Mutation m : {Mutation::none, Mutation::t_exponent, Mutation::rho_square, Mutation::drop_summand,
                       Mutation::skip_threshold, Mutation::t_domain_reading})
        if (s == mutation_name(m)) return m;
    return std::nullopt;
}

// rho_n = (1 -> 2 -> ... -> n -> 1), as an explicit table.
inline int rho_cycle(int n, int b, int a) {
    if (a < 1 || a > n) throw std::out_of_range("rho_cycle: factor out of range");
    int bb = ((b % n) + n) % n;
    return ((a - 1 + bb) % n) + 1;
}

// varrho_c: [c] -> {1..c}; i -> i+1 for i <= c-1 and c -> 1.
inline int varrho(int c, int i) {
    if (i < 0 || i > c) throw std::out_of_range("varrho: index out of range");
    return (i <= c - 1) ? i + 1 : 1;
}

// ---------------------------------------------------------------------------
// Chain schemes.

struct Chain {
    Family fam = Family::T;
    int factor = 1;
    int first_free = 1;        // 0 for the bar construction, 1 otherwise
    Polynomial at_zero;        // value of g^(0) when first_free == 1
    Polynomial at_top;         // value of g^(p+1)
};

struct ChainAlias {  // g_{fam,factor}^(j) == g_{to_fam,to_factor}^(j) for all j
    Family fam;
    int factor;
    Family to_fam;
    int to_factor;
};

struct ChainModel {
    std::string name;
    std::vector<Chain> chains;
    std::vector<ChainAlias> chain_aliases;
};

inline SAlgPresentation build_chain_model(const ChainModel& cm, int p_max) {
    PresentationScheme s;
    s.name = cm.name;
    s.free_gens = [cm](int p) {
        std::vector<VarId> out;
        for (auto& ch : cm.chains)
            for (int j = ch.first_free; j <= p; ++j) out.emplace_back(ch.fam, j, ch.factor);
        return out;
    };
    s.aliases = [cm](int p) {
        std::vector<std::pair<VarId, Polynomial>> out;
        for (auto& ch : cm.chains) {
            if (ch.first_free == 1) out.emplace_back(VarId(ch.fam, 0, ch.factor), ch.at_zero);
            out.emplace_back(VarId(ch.fam, p + 1, ch.factor), ch.at_top);
        }
        for (auto& ca : cm.chain_aliases)
            for (int j = 0; j <= p + 1; ++j)
                out.emplace_back(VarId(ca.fam, j, ca.factor), Polynomial(VarId(ca.to_fam, j, ca.to_factor)));
        return out;
    };
    s.face = [](int, int i, const VarId& g) {
        VarId h = g;
        if (g.bar_index >= i + 1) h.bar_index -= 1;
        return Polynomial(h);
    };
    s.degeneracy = [](int, int i, const VarId& g) {
        VarId h = g;
        if (g.bar_index >= i + 1) h.bar_index += 1;
        return Polynomial(h);
    };
    return build_presentation(s, p_max);
}

// ---------------------------------------------------------------------------
// Model identifiers (the CLI syntax is the canonical key).

struct ModelId {
    enum class Kind { BarAtA, kA, kA_tensor, K_A, K_A_tensor_A, K_A_tensor_kA, K_A_tensor_A_kAe, kA_quotient_of_K };
    Kind kind = Kind::kA;
    int m = 1;  // pi-power parameter
    int n = 1;  // factor count / c / e, depending on the kind

    std::string str() const {
        switch (kind) {
            case Kind::BarAtA: return "BarAtA";
            case Kind::kA: return "kA(" + std::to_string(m) + ")";
            case Kind::kA_tensor: return "kA_tensor(" + std::to_string(n) + "," + std::to_string(m) + ")";
            case Kind::K_A: return "K_A";
            case Kind::K_A_tensor_A: return "K_A_tensor_A(" + std::to_string(n) + ")";
            case Kind::K_A_tensor_kA: return "K_A_tensor_kA(" + std::to_string(n) + ")";
            case Kind::K_A_tensor_A_kAe: return "K_A_tensor_A_kAe(" + std::to_string(n) + ")";
            case Kind::kA_quotient_of_K: return "kA_quotient_of_K(" + std::to_string(n) + ")";
        }
        return "?";
    }
};

std::optional<ModelId> parse_model_id(const std::string& s);

// ---------------------------------------------------------------------------
// Workspace: builds and caches presentations so that shared pointers are
// reused (morphism gluing compares endpoints by identity first).

class Workspace {
  public:
    explicit Workspace(int p_max, Mutation mut = Mutation::none) : p_max_(p_max), mut_(mut) {
        if (p_max < 2) throw std::invalid_argument("Workspace: p_max must be at least 2");
    }

    int p_max() const { return p_max_; }
    Mutation mutation() const { return mut_; }

    PresentationPtr cached(const std::string& key, const std::function<SAlgPresentation()>& make) {
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto p = std::make_shared<const SAlgPresentation>(make());
        cache_.emplace(key, p);
        return p;
    }

    PresentationPtr constant() {
        return cached("constant", [&] { return build_chain_model({"constant", {}, {}}, p_max_); });
    }

    PresentationPtr bar_At() {
        return cached("BarAtA", [&] {
            ChainModel cm{"BarAtA", {Chain{Family::T, 1, 0, Polynomial(), Polynomial()}}, {}};
            return build_chain_model(cm, p_max_);
        });
    }

    // k_A^{(x)n}(m), direct presentation on chains t_1..t_n; kA(m) is n = 1.
    PresentationPtr kA_tensor(int n, int m) {
        if (n < 1 || m < 1) throw std::invalid_argument("kA_tensor: parameters must be positive");
        std::string key = (n == 1) ? "kA(" + std::to_string(m) + ")" : ModelId{ModelId::Kind::kA_tensor, m, n}.str();
        return cached(key, [&] {
            ChainModel cm;
            cm.name = key;
            for (int a = 1; a <= n; ++a)
                cm.chains.push_back(Chain{Family::T, a, 1, Polynomial::pi(m), Polynomial()});
            return build_chain_model(cm, p_max_);
        });
    }
    PresentationPtr kA(int m) { return kA_tensor(1, m); }

    // K_A^{(x)n}: chains t_a, u_a, both with boundary value pi.
    PresentationPtr K_tensor_A(int n) {
        if (n < 1) throw std::invalid_argument("K_tensor_A: n must be positive");
        std::string key = (n == 1) ? "K_A" : ModelId{ModelId::Kind::K_A_tensor_A, 1, n}.str();
        return cached(key, [&] {
            ChainModel cm;
            cm.name = key;
            for (int a = 1; a <= n; ++a) {
                cm.chains.push_back(Chain{Family::T, a, 1, Polynomial::pi(), Polynomial()});
                cm.chains.push_back(Chain{Family::U, a, 1, Polynomial::pi(), Polynomial()});
            }
            return build_chain_model(cm, p_max_);
        });
    }
    PresentationPtr K_A() { return K_tensor_A(1); }

    // K_A^{(x)_{k_A} c}: u_a == t_{a+1} for a = 1..c-1.
    PresentationPtr K_tensor_kA(int c) {
        if (c < 1) throw std::invalid_argument("K_tensor_kA: c must be positive");
        std::string key = ModelId{ModelId::Kind::K_A_tensor_kA, 1, c}.str();
        return cached(key, [&] {
            ChainModel cm;
            cm.name = key;
            for (int a = 1; a <= c; ++a) cm.chains.push_back(Chain{Family::T, a, 1, Polynomial::pi(), Polynomial()});
            cm.chains.push_back(Chain{Family::U, c, 1, Polynomial::pi(), Polynomial()});
            for (int a = 1; a <= c - 1; ++a) cm.chain_aliases.push_back(ChainAlias{Family::U, a, Family::T, a + 1});
            return build_chain_model(cm, p_max_);
        });
    }

    // K_A (x) k_A^{(x)e}: u_a == t_a for a = 2..e+1.
    PresentationPtr K_tensor_A_kAe(int e) {
        if (e < 0) throw std::invalid_argument("K_tensor_A_kAe: e must be non-negative");
        std::string key = ModelId{ModelId::Kind::K_A_tensor_A_kAe, 1, e}.str();
        return cached(key, [&] {
            ChainModel cm;
            cm.name = key;
            for (int a = 1; a <= e + 1; ++a) cm.chains.push_back(Chain{Family::T, a, 1, Polynomial::pi(), Polynomial()});
            cm.chains.push_back(Chain{Family::U, 1, 1, Polynomial::pi(), Polynomial()});
            for (int a = 2; a <= e + 1; ++a) cm.chain_aliases.push_back(ChainAlias{Family::U, a, Family::T, a});
            return build_chain_model(cm, p_max_);
        });
    }

    // k_A^{(x)c} presented as K_A^{(x)_{k_A}c} / <t_1 - u_c>: adds u_c == t_1.
    PresentationPtr kA_quotient_of_K(int c) {
        if (c < 1) throw std::invalid_argument("kA_quotient_of_K: c must be positive");
        std::string key = ModelId{ModelId::Kind::kA_quotient_of_K, 1, c}.str();
        return cached(key, [&] {
            ChainModel cm;
            cm.name = key;
            for (int a = 1; a <= c; ++a) cm.chains.push_back(Chain{Family::T, a, 1, Polynomial::pi(), Polynomial()});
            for (int a = 1; a <= c - 1; ++a) cm.chain_aliases.push_back(ChainAlias{Family::U, a, Family::T, a + 1});
            cm.chain_aliases.push_back(ChainAlias{Family::U, c, Family::T, 1});
            return build_chain_model(cm, p_max_);
        });
    }

    // k_A^{(x)c} presented as K_A^{(x)c} / <t_a - u_a : all a>.
    PresentationPtr kA_quotient_all(int c) {
        if (c < 1) throw std::invalid_argument("kA_quotient_all: c must be positive");
        return cached("kA_quotient_all(" + std::to_string(c) + ")", [&] {
            ChainModel cm;
            cm.name = "kA_quotient_all(" + std::to_string(c) + ")";
            for (int a = 1; a <= c; ++a) cm.chains.push_back(Chain{Family::T, a, 1, Polynomial::pi(), Polynomial()});
            for (int a = 1; a <= c; ++a) cm.chain_aliases.push_back(ChainAlias{Family::U, a, Family::T, a});
            return build_chain_model(cm, p_max_);
        });
    }

    // k_A^{(x)c} (x) K_A presented as K_A^{(x)(c+1)} / <t_a - u_a : a <= c>.
    PresentationPtr kAc_tensor_K(int c) {
        if (c < 0) throw std::invalid_argument("kAc_tensor_K: c must be non-negative");
        return cached("kAc_tensor_K(" + std::to_string(c) + ")", [&] {
            ChainModel cm;
            cm.name = "kAc_tensor_K(" + std::to_string(c) + ")";
            for (int a = 1; a <= c + 1; ++a) cm.chains.push_back(Chain{Family::T, a, 1, Polynomial::pi(), Polynomial()});
            cm.chains.push_back(Chain{Family::U, c + 1, 1, Polynomial::pi(), Polynomial()});
            for (int a = 1; a <= c; ++a) cm.chain_aliases.push_back(ChainAlias{Family::U, a, Family::T, a});
            return build_chain_model(cm, p_max_);
        });
    }

    // Intermediate quotients for the skip diagrams.
    PresentationPtr quot_f(int c, int r) {  // K_A^{(x)(c+1)} / <t_{r+2} - u_{r+1}>
        std::string key = "Qf(" + std::to_string(c) + "," + std::to_string(r) + ")";
        return cached(key, [&] {
            ChainModel cm;
            cm.name = key;
            for (int a = 1; a <= c + 1; ++a) {
                cm.chains.push_back(Chain{Family::T, a, 1, Polynomial::pi(), Polynomial()});
                if (a != r + 1) cm.chains.push_back(Chain{Family::U, a, 1, Polynomial::pi(), Polynomial()});
            }
            cm.chain_aliases.push_back(ChainAlias{Family::U, r + 1, Family::T, r + 2});
            return build_chain_model(cm, p_max_);
        });
    }
    PresentationPtr quot_g(int c, int r) {  // K_A^{(x)(c+1)} / <t_{r+2} - u_{r+2}>
        std::string key = "Qg(" + std::to_string(c) + "," + std::to_string(r) + ")";
        return cached(key, [&] {
            ChainModel cm;
            cm.name = key;
            for (int a = 1; a <= c + 1; ++a) {
                cm.chains.push_back(Chain{Family::T, a, 1, Polynomial::pi(), Polynomial()});
                if (a != r + 2) cm.chains.push_back(Chain{Family::U, a, 1, Polynomial::pi(), Polynomial()});
            }
            cm.chain_aliases.push_back(ChainAlias{Family::U, r + 2, Family::T, r + 2});
            return build_chain_model(cm, p_max_);
        });
    }
    PresentationPtr quot_q1(int c) {  // K_A^{(x)(c+1)} / <t_1 - u_{c+1}>
        std::string key = "Q1(" + std::to_string(c) + ")";
        return cached(key, [&] {
            ChainModel cm;
            cm.name = key;
            for (int a = 1; a <= c + 1; ++a) {
                cm.chains.push_back(Chain{Family::T, a, 1, Polynomial::pi(), Polynomial()});
                if (a != c + 1) cm.chains.push_back(Chain{Family::U, a, 1, Polynomial::pi(), Polynomial()});
            }
            cm.chain_aliases.push_back(ChainAlias{Family::U, c + 1, Family::T, 1});
            return build_chain_model(cm, p_max_);
        });
    }
    PresentationPtr quot_q2(int c) {  // ... / <t_1 - u_{c+1}, u_a - t_a : a = 2..c>
        std::string key = "Q2(" + std::to_string(c) + ")";
        return cached(key, [&] {
            ChainModel cm;
            cm.name = key;
            for (int a = 1; a <= c + 1; ++a) cm.chains.push_back(Chain{Family::T, a, 1, Polynomial::pi(), Polynomial()});
            cm.chains.push_back(Chain{Family::U, 1, 1, Polynomial::pi(), Polynomial()});
            cm.chain_aliases.push_back(ChainAlias{Family::U, c + 1, Family::T, 1});
            for (int a = 2; a <= c; ++a) cm.chain_aliases.push_back(ChainAlias{Family::U, a, Family::T, a});
            return build_chain_model(cm, p_max_);
        });
    }
    PresentationPtr quot_q1p(int c) {  // K_A^{(x)(c+1)} / <t_{c+1} - u_{c+1}>
        std::string key = "Q1p(" + std::to_string(c) + ")";
        return cached(key, [&] {
            ChainModel cm;
            cm.name = key;
            for (int a = 1; a <= c + 1; ++a) {
                cm.chains.push_back(Chain{Family::T, a, 1, Polynomial::pi(), Polynomial()});
                if (a != c + 1) cm.chains.push_back(Chain{Family::U, a, 1, Polynomial::pi(), Polynomial()});
            }
            cm.chain_aliases.push_back(ChainAlias{Family::U, c + 1, Family::T, c + 1});
            return build_chain_model(cm, p_max_);
        });
    }
    PresentationPtr quot_q2p(int c) {  // ... / <t_{c+1} - u_{c+1}, u_a - t_a : a = 1..c-1>
        std::string key = "Q2p(" + std::to_string(c) + ")";
        return cached(key, [&] {
            ChainModel cm;
            cm.name = key;
            for (int a = 1; a <= c + 1; ++a) cm.chains.push_back(Chain{Family::T, a, 1, Polynomial::pi(), Polynomial()});
            cm.chains.push_back(Chain{Family::U, c, 1, Polynomial::pi(), Polynomial()});
            cm.chain_aliases.push_back(ChainAlias{Family::U, c + 1, Family::T, c + 1});
            for (int a = 1; a <= c - 1; ++a) cm.chain_aliases.push_back(ChainAlias{Family::U, a, Family::T, a});
            return build_chain_model(cm, p_max_);
        });
    }

    PresentationPtr by_id(const ModelId& id) {
        switch (id.kind) {
            case ModelId::Kind::BarAtA: return bar_At();
            case ModelId::Kind::kA: return kA(id.m);
            case ModelId::Kind::kA_tensor: return kA_tensor(id.n, id.m);
            case ModelId::Kind::K_A: return K_A();
            case ModelId::Kind::K_A_tensor_A: return K_tensor_A(id.n);
            case ModelId::Kind::K_A_tensor_kA: return K_tensor_kA(id.n);
            case ModelId::Kind::K_A_tensor_A_kAe: return K_tensor_A_kAe(id.n);
            case ModelId::Kind::kA_quotient_of_K: return kA_quotient_of_K(id.n);
        }
        throw std::logic_error("by_id: bad kind");
    }

    PresentationPtr simplex_tensored(int l, const PresentationPtr& P) {
        std::string key = "Delta^" + std::to_string(l) + "(x)" + P->name();
        return cached(key, [&] { return simplex_tensor(l, *P, key); });
    }

    PresentationPtr specialized(const PresentationPtr& P, const Int& c) {
        std::string key = P->name() + "|pi=" + c.str();
        return cached(key, [&] { return specialize_pi(*P, c, "|pi=" + c.str()); });
    }

  private:
    int p_max_;
    Mutation mut_;
    std::map<std::string, PresentationPtr> cache_;
};

inline std::optional<ModelId> parse_model_id(const std::string& s) {
    auto args = [&](const std::string& head, int count) -> std::optional<std::vector<int>> {
        if (s.rfind(head + "(", 0) != 0 || s.back() != ')') return std::nullopt;
        std::string inner = s.substr(head.size() + 1, s.size() - head.size() - 2);
        std::vector<int> out;
        std::size_t pos = 0;
        while (pos <= inner.size()) {
            std::size_t comma = inner.find(',', pos);
            std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty()) return std::nullopt;
            out.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (static_cast<int>(out.size()) != count) return std::nullopt;
        return out;
    };
    if (s == "BarAtA") return ModelId{ModelId::Kind::BarAtA, 1, 1};
    if (s == "K_A") return ModelId{ModelId::Kind::K_A, 1, 1};
    if (auto a = args("kA", 1)) return ModelId{ModelId::Kind::kA, (*a)[0], 1};
    if (auto a = args("kA_tensor", 2)) return ModelId{ModelId::Kind::kA_tensor, (*a)[1], (*a)[0]};
    if (auto a = args("K_A_tensor_A", 1)) return ModelId{ModelId::Kind::K_A_tensor_A, 1, (*a)[0]};
    if (auto a = args("K_A_tensor_kA", 1)) return ModelId{ModelId::Kind::K_A_tensor_kA, 1, (*a)[0]};
    if (auto a = args("K_A_tensor_A_kAe", 1)) return ModelId{ModelId::Kind::K_A_tensor_A_kAe, 1, (*a)[0]};
    if (auto a = args("kA_quotient_of_K", 1)) return ModelId{ModelId::Kind::kA_quotient_of_K, 1, (*a)[0]};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Structural morphisms.

inline SAlgMorphism from_free_rule(std::string name, PresentationPtr dom, PresentationPtr cod, int p_max,
                                   const std::function<Polynomial(int, const VarId&)>& rule) {
    std::vector<std::map<VarId, Polynomial>> raw(static_cast<std::size_t>(p_max) + 1);
    for (int p = 0; p <= p_max; ++p)
        for (auto& g : dom->free_gens(p)) raw[static_cast<std::size_t>(p)][g] = rule(p, g);
    return SAlgMorphism(std::move(name), std::move(dom), std::move(cod), std::move(raw));
}

// The quotient map between two presentations sharing generator names, the
// codomain having more aliases.
inline SAlgMorphism quotient_morphism(const PresentationPtr& P, const PresentationPtr& Q, int p_max,
                                      const std::string& name = "") {
    return SAlgMorphism::from_rule(name.empty() ? "quot(" + P->name() + "->" + Q->name() + ")" : name, P, Q, p_max,
                                   [](int, const VarId& g) { return Polynomial(g); });
}

// can(m_hi, m_lo)^{(x)n}: t^(j)_a -> pi^{m_hi - m_lo} t^(j)_a.
inline SAlgMorphism can_map(Workspace& ws, int m_hi, int m_lo, int n) {
    if (m_hi < m_lo || m_lo < 1) throw std::invalid_argument("can_map: need m_hi >= m_lo >= 1");
    auto dom = ws.kA_tensor(n, m_hi);
    auto cod = ws.kA_tensor(n, m_lo);
    std::string nm = "can(" + std::to_string(m_hi) + "," + std::to_string(m_lo) + ")^(x)" + std::to_string(n);
    return SAlgMorphism::from_rule(nm, dom, cod, ws.p_max(), [m_hi, m_lo](int, const VarId& g) {
        return Polynomial::pi(m_hi - m_lo) * Polynomial(g);
    });
}

// rho_n^b acting on a tensor model with n factors (t and u chains alike).
inline SAlgMorphism rho_action(Workspace& ws, int n, int b, const PresentationPtr& model) {
    std::string nm = "rho_" + std::to_string(n) + "^" + std::to_string(b) + "@" + model->name();
    return SAlgMorphism::from_rule(nm, model, model, ws.p_max(), [n, b](int, const VarId& g) {
        VarId h = g;
        h.factor = rho_cycle(n, b, g.factor);
        return Polynomial(h);
    });
}

// zeta_n as the automorphism of K_A^{(x)n}: fixes t, rotates u by one.
inline SAlgMorphism zeta_K_level(Workspace& ws, int n) {
    auto K = ws.K_tensor_A(n);
    return SAlgMorphism::from_rule("zeta_" + std::to_string(n) + "@K", K, K, ws.p_max(), [n](int, const VarId& g) {
        VarId h = g;
        if (g.family == Family::U) h.factor = rho_cycle(n, 1, g.factor);
        return Polynomial(h);
    });
}

// zeta_n descended: K_A^{(x)_{k_A}n} -> K_A (x) k_A^{(x)(n-1)}.
inline SAlgMorphism zeta_lift(Workspace& ws, int n) {
    auto dom = ws.K_tensor_kA(n);
    auto cod = ws.K_tensor_A_kAe(n - 1);
    return SAlgMorphism::from_rule("zeta_" + std::to_string(n) + "~", dom, cod, ws.p_max(), [n](int, const VarId& g) {
        VarId h = g;
        if (g.family == Family::U) h.factor = rho_cycle(n, 1, g.factor);
        return Polynomial(h);
    });
}

// zeta_n on the quotients: kA_quotient_of_K(n) -> kA_quotient_all(n).
inline SAlgMorphism zeta_quotient(Workspace& ws, int n) {
    auto dom = ws.kA_quotient_of_K(n);
    auto cod = ws.kA_quotient_all(n);
    return SAlgMorphism::from_rule("zeta_" + std::to_string(n), dom, cod, ws.p_max(), [n](int, const VarId& g) {
        VarId h = g;
        if (g.family == Family::U) h.factor = rho_cycle(n, 1, g.factor);
        return Polynomial(h);
    });
}

// The skip morphism on the k_A-relative tensor covering. The t-rule keeps
// factors up to varrho_c(r); the u-rule switches one step earlier.
inline SAlgMorphism f_tilde(Workspace& ws, int c, int r) {
    if (r < 0 || r > c) throw std::out_of_range("f_tilde: r out of range");
    auto dom = ws.K_tensor_kA(c);
    auto cod = ws.K_tensor_kA(c + 1);
    int rho = varrho(c, r);
    int u_keep = (ws.mutation() == Mutation::skip_threshold) ? rho : rho - 1;
    std::string nm = "f~(" + std::to_string(c) + ")_" + std::to_string(r);
    return SAlgMorphism::from_rule(nm, dom, cod, ws.p_max(), [rho, u_keep](int, const VarId& g) {
        VarId h = g;
        int keep = (g.family == Family::T) ? rho : u_keep;
        if (g.factor >= keep + 1) h.factor += 1;
        return Polynomial(h);
    });
}

// The same formulas into the intermediate quotient (upper-right arrow of the
// skip diagram), domain K_A^{(x)c}.
inline SAlgMorphism f_theta(Workspace& ws, int c, int r) {
    auto dom = ws.K_tensor_A(c);
    auto cod = ws.quot_f(c, r);
    int rho = varrho(c, r);
    std::string nm = "f~formulas(" + std::to_string(c) + ")_" + std::to_string(r);
    return SAlgMorphism::from_rule(nm, dom, cod, ws.p_max(), [rho](int, const VarId& g) {
        VarId h = g;
        int keep = (g.family == Family::T) ? rho : rho - 1;
        if (g.factor >= keep + 1) h.factor += 1;
        return Polynomial(h);
    });
}

// Induced skip on the quotient presentation of k_A^{(x)c}; the covering
// formulas are pushed down, so the alias certificate is genuine.
inline SAlgMorphism f_skip(Workspace& ws, int c, int r) {
    SAlgMorphism cover = f_tilde(ws, c, r);
    auto dom = ws.kA_quotient_of_K(c);
    auto cod = ws.kA_quotient_of_K(c + 1);
    std::string nm = "f(" + std::to_string(c) + ")_" + std::to_string(r);
    return SAlgMorphism::from_rule(nm, dom, cod, ws.p_max(),
                                   [&cover](int p, const VarId& g) { return cover.raw_image(p, g); });
}

// g-variant: same skip rule on both chains, covering K_A (x) k_A^{(x)(c-1)}.
inline SAlgMorphism g_tilde(Workspace& ws, int c, int r) {
    if (r < 0 || r > c) throw std::out_of_range("g_tilde: r out of range");
    auto dom = ws.K_tensor_A_kAe(c - 1);
    auto cod = ws.K_tensor_A_kAe(c);
    int rho = varrho(c, r);
    int u_keep = (ws.mutation() == Mutation::skip_threshold) ? rho - 1 : rho;
    std::string nm = "g~(" + std::to_string(c) + ")_" + std::to_string(r);
    return SAlgMorphism::from_rule(nm, dom, cod, ws.p_max(), [rho, u_keep](int, const VarId& g) {
        VarId h = g;
        int keep = (g.family == Family::T) ? rho : u_keep;
        if (g.factor >= keep + 1) h.factor += 1;
        return Polynomial(h);
    });
}

inline SAlgMorphism g_theta(Workspace& ws, int c, int r) {
    auto dom = ws.K_tensor_A(c);
    auto cod = ws.quot_g(c, r);
    int rho = varrho(c, r);
    std::string nm = "g~formulas(" + std::to_string(c) + ")_" + std::to_string(r);
    return SAlgMorphism::from_rule(nm, dom, cod, ws.p_max(), [rho](int, const VarId& g) {
        VarId h = g;
        if (g.factor >= rho + 1) h.factor += 1;
        return Polynomial(h);
    });
}

inline SAlgMorphism g_skip(Workspace& ws, int c, int r) {
    SAlgMorphism cover = g_tilde(ws, c, r);
    auto dom = ws.kA_quotient_all(c);
    auto cod = ws.kA_quotient_all(c + 1);
    std::string nm = "g(" + std::to_string(c) + ")_" + std::to_string(r);
    return SAlgMorphism::from_rule(nm, dom, cod, ws.p_max(),
                                   [&cover](int p, const VarId& g) { return cover.raw_image(p, g); });
}

// Transport of a skip to the direct presentation of k_A^{(x)c} along the
// canonical chain identification t_a <-> t_a.
inline SAlgMorphism iso_quotient_to_direct(Workspace& ws, const PresentationPtr& quot, int c) {
    auto dir = ws.kA_tensor(c, 1);
    return from_free_rule("ident(" + quot->name() + "->" + dir->name() + ")", quot, dir, ws.p_max(),
                          [](int, const VarId& g) { return Polynomial(g); });
}

inline SAlgMorphism iso_direct_to_quotient(Workspace& ws, int c, const PresentationPtr& quot) {
    auto dir = ws.kA_tensor(c, 1);
    return from_free_rule("ident(" + dir->name() + "->" + quot->name() + ")", dir, quot, ws.p_max(),
                          [](int, const VarId& g) { return Polynomial(g); });
}

inline SAlgMorphism f_skip_direct(Workspace& ws, int c, int r) {
    SAlgMorphism f = f_skip(ws, c, r);
    SAlgMorphism in = iso_direct_to_quotient(ws, c, ws.kA_quotient_of_K(c));
    SAlgMorphism out = iso_quotient_to_direct(ws, ws.kA_quotient_of_K(c + 1), c + 1);
    SAlgMorphism comp = compose(out, compose(f, in));
    comp.rename("f(" + std::to_string(c) + ")_" + std::to_string(r) + "@direct");
    return comp;
}

inline SAlgMorphism g_skip_direct(Workspace& ws, int c, int r) {
    SAlgMorphism g = g_skip(ws, c, r);
    SAlgMorphism in = iso_direct_to_quotient(ws, c, ws.kA_quotient_all(c));
    SAlgMorphism out = iso_quotient_to_direct(ws, ws.kA_quotient_all(c + 1), c + 1);
    SAlgMorphism comp = compose(out, compose(g, in));
    comp.rename("g(" + std::to_string(c) + ")_" + std::to_string(r) + "@direct");
    return comp;
}

// A d-vector supplies d_s in [s] for s in a contiguous range.
struct DVector {
    std::map<int, int> entries;

    int at(int s) const {
        auto it = entries.find(s);
        if (it == entries.end()) throw std::invalid_argument("DVector: no entry for s=" + std::to_string(s));
        if (it->second < 0 || it->second > s) throw std::invalid_argument("DVector: entry out of range");
        return it->second;
    }
    std::string str() const {
        std::string out = "[";
        bool first = true;
        for (auto& [s, v] : entries) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
        return out + "]";
    }
};

// All d-vectors for s in [lo..hi].
inline std::vector<DVector> enumerate_dvectors(int lo, int hi) {
    std::vector<DVector> out{DVector{}};
    for (int s = lo; s <= hi; ++s) {
        std::vector<DVector> next;
        for (auto& d : out)
            for (int v = 0; v <= s; ++v) {
                DVector e = d;
                e.entries[s] = v;
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

enum class SkipFlavor { F, G };

// The composite of skips k_A^{(x)a} -> k_A^{(x)b} on the direct presentation.
inline SAlgMorphism skip_composite_direct(Workspace& ws, SkipFlavor fl, int a, int b, const DVector& d) {
    if (a < 1 || a > b) throw std::invalid_argument("skip_composite_direct: need 1 <= a <= b");
    SAlgMorphism acc = identity_morphism(ws.kA_tensor(a, 1), ws.p_max(),
                                         (fl == SkipFlavor::F ? "ff" : "gg") + std::string("[") + std::to_string(a) +
                                             "," + std::to_string(b) + "]" + (a == b ? "" : d.str()));
    for (int s = a; s <= b - 1; ++s) {
        SAlgMorphism step = (fl == SkipFlavor::F) ? f_skip_direct(ws, s, d.at(s)) : g_skip_direct(ws, s, d.at(s));
        acc = compose(step, acc);
    }
    acc.rename((fl == SkipFlavor::F ? "ff" : "gg") + std::string("[") + std::to_string(a) + "," + std::to_string(b) +
               "]_" + d.str());
    return acc;
}

// Composite on the quotient presentations (used by the conjugation square).
inline SAlgMorphism skip_composite_quotient(Workspace& ws, SkipFlavor fl, int a, int b, const DVector& d) {
    if (a < 1 || a > b) throw std::invalid_argument("skip_composite_quotient: need 1 <= a <= b");
    auto start = (fl == SkipFlavor::F) ? ws.kA_quotient_of_K(a) : ws.kA_quotient_all(a);
    SAlgMorphism acc = identity_morphism(start, ws.p_max());
    for (int s = a; s <= b - 1; ++s) {
        SAlgMorphism step = (fl == SkipFlavor::F) ? f_skip(ws, s, d.at(s)) : g_skip(ws, s, d.at(s));
        acc = compose(step, acc);
    }
    acc.rename((fl == SkipFlavor::F ? "ff" : "gg") + std::string("[") + std::to_string(a) + "," + std::to_string(b) +
               "]_" + d.str() + "@quot");
    return acc;
}

// ---------------------------------------------------------------------------
// Auxiliary maps of the r = c skip diagrams.

inline SAlgMorphism vartheta_map(Workspace& ws, int c) {
    return SAlgMorphism::from_rule("vartheta(" + std::to_string(c) + ")", ws.K_tensor_A(c), ws.quot_q1(c), ws.p_max(),
                                   [](int, const VarId& g) {
                                       VarId h = g;
                                       if (g.family == Family::T) {
                                           h.family = Family::U;
                                       } else {
                                           h.family = Family::T;
                                           h.factor += 1;
                                       }
                                       return Polynomial(h);
                                   });
}

inline SAlgMorphism psi_map(Workspace& ws, int c) {
    return SAlgMorphism::from_rule("psi(" + std::to_string(c) + ")", ws.K_tensor_kA(c), ws.quot_q2(c), ws.p_max(),
                                   [](int, const VarId& g) {
                                       VarId h = g;
                                       if (g.family == Family::T) {
                                           h.family = Family::U;
                                       } else {
                                           h.family = Family::T;
                                           h.factor += 1;
                                       }
                                       return Polynomial(h);
                                   });
}

inline SAlgMorphism phi_map(Workspace& ws, int c) {
    return SAlgMorphism::from_rule("phi(" + std::to_string(c) + ")", ws.quot_q2(c), ws.K_tensor_kA(c + 1), ws.p_max(),
                                   [c](int, const VarId& g) {
                                       VarId h = g;
                                       if (g.family == Family::T) {
                                           h.family = Family::U;
                                       } else {
                                           h.family = Family::T;
                                           if (g.factor == 1)
                                               h.factor = 1;
                                           else if (g.factor <= c)
                                               h.factor = g.factor + 1;
                                           else
                                               h.factor = 2;
                                       }
                                       return Polynomial(h);
                                   });
}

inline SAlgMorphism phi_inverse(Workspace& ws, int c) {
    return from_free_rule("phi^{-1}(" + std::to_string(c) + ")", ws.K_tensor_kA(c + 1), ws.quot_q2(c), ws.p_max(),
                          [](int, const VarId& g) {
                              VarId h = g;
                              if (g.family == Family::T) {
                                  if (g.factor == 1) {
                                      h.family = Family::U;  // t_1 -> u_1
                                  } else {
                                      h.factor = g.factor - 1;
                                  }
                              } else {
                                  h.family = Family::T;  // u_{c+1} -> t_{c+1}
                              }
                              return Polynomial(h);
                          });
}

inline SAlgMorphism omega_map(Workspace& ws, int c) {
    return SAlgMorphism::from_rule("omega(" + std::to_string(c) + ")", ws.K_tensor_A(c), ws.quot_q1p(c), ws.p_max(),
                                   [](int, const VarId& g) { return Polynomial(g); });
}

inline SAlgMorphism gamma_map(Workspace& ws, int c) {
    return SAlgMorphism::from_rule("gamma(" + std::to_string(c) + ")", ws.kAc_tensor_K(c - 1), ws.quot_q2p(c),
                                   ws.p_max(), [](int, const VarId& g) { return Polynomial(g); });
}

inline SAlgMorphism upsilon_map(Workspace& ws, int c) {
    return SAlgMorphism::from_rule("upsilon(" + std::to_string(c) + ")", ws.quot_q2p(c), ws.K_tensor_A_kAe(c),
                                   ws.p_max(), [c](int, const VarId& g) {
                                       VarId h = g;
                                       h.factor = rho_cycle(c + 1, 2, g.factor);
                                       return Polynomial(h);
                                   });
}

inline SAlgMorphism upsilon_inverse(Workspace& ws, int c) {
    return from_free_rule("upsilon^{-1}(" + std::to_string(c) + ")", ws.K_tensor_A_kAe(c), ws.quot_q2p(c), ws.p_max(),
                          [c](int, const VarId& g) {
                              VarId h = g;
                              h.factor = rho_cycle(c + 1, c - 1, g.factor);  // shift by -2 mod c+1
                              return Polynomial(h);
                          });
}

inline SAlgMorphism tau_map(Workspace& ws, int c) {
    return SAlgMorphism::from_rule("tau(" + std::to_string(c) + ")", ws.kAc_tensor_K(c), ws.quot_q2p(c), ws.p_max(),
                                   [c](int, const VarId& g) {
                                       VarId h = g;
                                       h.factor = rho_cycle(c + 1, c, g.factor);  // rho^{-1}
                                       return Polynomial(h);
                                   });
}

inline SAlgMorphism rho_bridge(Workspace& ws, int c_plus_1) {
    // k_A^{(x)c} (x) K_A -> K_A (x) k_A^{(x)c}, a -> a+1 cyclically.
    int c = c_plus_1 - 1;
    return SAlgMorphism::from_rule("rho_" + std::to_string(c_plus_1) + "~bridge", ws.kAc_tensor_K(c),
                                   ws.K_tensor_A_kAe(c), ws.p_max(), [c_plus_1](int, const VarId& g) {
                                       VarId h = g;
                                       h.factor = rho_cycle(c_plus_1, 1, g.factor);
                                       return Polynomial(h);
                                   });
}

}  // namespace simpforge
