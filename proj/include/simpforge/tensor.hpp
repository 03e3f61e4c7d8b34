#pragma once
// Tensor product of presentations over the base ring, the simplex tensoring
// Delta^l (x) R, vertex restrictions, and the induced lifts of morphisms.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "simpforge/morphism.hpp"

namespace simpforge {

using VarRelabel = std::function<VarId(const VarId&)>;

inline VarRelabel relabel_identity() {
    return [](const VarId& v) { return v; };
}

inline VarRelabel relabel_shift_factor(int shift) {
    return [shift](const VarId& v) {
        VarId w = v;
        w.factor += shift;
        return w;
    };
}

inline VarRelabel relabel_family(Family from, Family to) {
    return [from, to](const VarId& v) {
        VarId w = v;
        if (w.family == from) w.family = to;
        return w;
    };
}

inline Polynomial relabel_poly(const Polynomial& x, const VarRelabel& r) {
    return x.map_variables([&](const VarId& v) { return Polynomial(r(v)); });
}

// Tensor over the base ring: generators are the disjoint union, faces and
// degeneracies act factor-wise, aliases are inherited per factor. The left
// relabeling defaults to the identity; the right one must avoid collisions.
inline SAlgPresentation tensor_over_A(const SAlgPresentation& P, const SAlgPresentation& Q, const std::string& name,
                                      const VarRelabel& left, const VarRelabel& right) {
    int p_max = std::min(P.max_level(), Q.max_level());
    std::vector<LevelData> levels(static_cast<std::size_t>(p_max) + 1);
    for (int p = 0; p <= p_max; ++p) {
        LevelData& L = levels[static_cast<std::size_t>(p)];
        std::map<VarId, int> seen;
        auto emit = [&](const VarId& v) {
            if (++seen[v] > 1)
                throw std::invalid_argument("tensor_over_A: generator collision at " + v.str() + " in " + name);
        };
        for (auto& g : P.free_gens(p)) {
            L.free_gens.push_back(left(g));
            emit(L.free_gens.back());
        }
        for (auto& g : Q.free_gens(p)) {
            L.free_gens.push_back(right(g));
            emit(L.free_gens.back());
        }
        for (auto& [g, v] : P.level(p).aliases) {
            L.aliases.emplace(left(g), relabel_poly(v, left));
            emit(left(g));
        }
        for (auto& [g, v] : Q.level(p).aliases) {
            L.aliases.emplace(right(g), relabel_poly(v, right));
            emit(right(g));
        }
        L.face.resize(p >= 1 ? static_cast<std::size_t>(p) + 1 : 0);
        L.degeneracy.resize(static_cast<std::size_t>(p) + 1);
        for (int i = 0; i <= p; ++i) {
            auto copy_side = [&](const SAlgPresentation& S, const VarRelabel& r) {
                const LevelData& SL = S.level(p);
                if (p >= 1)
                    for (auto& [g, img] : SL.face[static_cast<std::size_t>(i)])
                        L.face[static_cast<std::size_t>(i)][r(g)] = relabel_poly(img, r);
                for (auto& [g, img] : SL.degeneracy[static_cast<std::size_t>(i)])
                    L.degeneracy[static_cast<std::size_t>(i)][r(g)] = relabel_poly(img, r);
            };
            copy_side(P, left);
            copy_side(Q, right);
        }
    }
    return SAlgPresentation(name, std::move(levels));
}

inline SAlgPresentation tensor_over_A(const SAlgPresentation& P, const SAlgPresentation& Q, const std::string& name,
                                      int right_factor_shift) {
    return tensor_over_A(P, Q, name, relabel_identity(), relabel_shift_factor(right_factor_shift));
}

// Delta^l (x) P: level-p generators are g(alpha) for alpha in Delta^l_p; the
// new label is appended to the descriptor. d_i acts by P's face on the
// generator and by precomposition with delta on every label it carries;
// likewise s_i with sigma.
inline SAlgPresentation simplex_tensor(int l, const SAlgPresentation& P, const std::string& name) {
    if (l < 0) throw std::invalid_argument("simplex_tensor: negative simplex dimension");
    int p_max = P.max_level();
    std::vector<LevelData> levels(static_cast<std::size_t>(p_max) + 1);
    auto labeled = [](const Polynomial& x, const MonotoneMap& alpha) {
        return x.map_variables([&](const VarId& v) { return Polynomial(with_label(v, alpha)); });
    };
    for (int p = 0; p <= p_max; ++p) {
        LevelData& L = levels[static_cast<std::size_t>(p)];
        const LevelData& PL = P.level(p);
        auto alphas = enumerate_maps(p, l);
        for (auto& alpha : alphas)
            for (auto& g : PL.free_gens) L.free_gens.push_back(with_label(g, alpha));
        for (auto& alpha : alphas)
            for (auto& [g, v] : PL.aliases) L.aliases.emplace(with_label(g, alpha), labeled(v, alpha));
        L.face.resize(p >= 1 ? static_cast<std::size_t>(p) + 1 : 0);
        L.degeneracy.resize(static_cast<std::size_t>(p) + 1);
        for (int i = 0; i <= p; ++i) {
            for (auto& alpha : alphas) {
                if (p >= 1) {
                    MonotoneMap af = compose(alpha, delta(p, i));
                    for (auto& [g, img] : PL.face[static_cast<std::size_t>(i)])
                        L.face[static_cast<std::size_t>(i)][with_label(g, alpha)] = labeled(img, af);
                }
                MonotoneMap as = compose(alpha, sigma(p, i));
                for (auto& [g, img] : PL.degeneracy[static_cast<std::size_t>(i)])
                    L.degeneracy[static_cast<std::size_t>(i)][with_label(g, alpha)] = labeled(img, as);
            }
        }
    }
    return SAlgPresentation(name, std::move(levels));
}

// Lift f: P -> Q to Delta^l (x) P -> Delta^l (x) Q, preserving labels.
inline SAlgMorphism simplex_tensor_morphism(int l, const SAlgMorphism& f, const PresentationPtr& tensored_dom,
                                            const PresentationPtr& tensored_cod, const std::string& name = "") {
    int p_max = std::min(f.max_level(), tensored_dom->max_level());
    std::vector<std::map<VarId, Polynomial>> raw(static_cast<std::size_t>(p_max) + 1);
    for (int p = 0; p <= p_max; ++p) {
        auto lift = [&](const VarId& gl) {
            if (gl.labels.empty()) throw std::invalid_argument("simplex_tensor_morphism: unlabeled generator");
            VarId g = gl;
            MonotoneMap alpha = g.labels.back();
            g.labels.pop_back();
            Polynomial img = f.raw_image(p, g);
            raw[static_cast<std::size_t>(p)][gl] =
                img.map_variables([&](const VarId& v) { return Polynomial(with_label(v, alpha)); });
        };
        for (auto& gl : tensored_dom->free_gens(p)) lift(gl);
        for (auto& [gl, v] : tensored_dom->level(p).aliases) lift(gl);
    }
    return SAlgMorphism(name.empty() ? "Delta^" + std::to_string(l) + "(x)" + f.name() : name, tensored_dom,
                        tensored_cod, std::move(raw));
}

// The coface relabeling Delta^{l-1} (x) P -> Delta^l (x) P on the outermost
// label: g(..., beta) -> g(..., delta(l, r) o beta).
inline SAlgMorphism coface_tensor_morphism(int l, int r, const PresentationPtr& dom_lm1, const PresentationPtr& cod_l,
                                           const std::string& name = "") {
    int p_max = dom_lm1->max_level();
    std::vector<std::map<VarId, Polynomial>> raw(static_cast<std::size_t>(p_max) + 1);
    for (int p = 0; p <= p_max; ++p) {
        auto push = [&](const VarId& gl) {
            if (gl.labels.empty()) throw std::invalid_argument("coface_tensor_morphism: unlabeled generator");
            VarId g = gl;
            g.labels.back() = compose(delta(l, r), g.labels.back());
            raw[static_cast<std::size_t>(p)][gl] = Polynomial(g);
        };
        for (auto& gl : dom_lm1->free_gens(p)) push(gl);
        for (auto& [gl, v] : dom_lm1->level(p).aliases) push(gl);
    }
    return SAlgMorphism(name.empty() ? "iota^" + std::to_string(l - 1) + "_" + std::to_string(r) : name, dom_lm1,
                        cod_l, std::move(raw));
}

// Restriction of f: Delta^l (x) P -> C along a vertex v of Delta^l.
inline SAlgMorphism vertex_restriction(const SAlgMorphism& f, int l, int v, const PresentationPtr& P,
                                       const std::string& name = "") {
    if (v < 0 || v > l) throw std::out_of_range("vertex_restriction: vertex out of range");
    int p_max = f.max_level();
    std::vector<std::map<VarId, Polynomial>> raw(static_cast<std::size_t>(p_max) + 1);
    for (int p = 0; p <= p_max; ++p) {
        MonotoneMap cv = constant_map(p, v, l);
        for (auto& g : P->free_gens(p)) raw[static_cast<std::size_t>(p)][g] = f.raw_image(p, with_label(g, cv));
        for (auto& [g, val] : P->level(p).aliases)
            raw[static_cast<std::size_t>(p)][g] = f.raw_image(p, with_label(g, cv));
    }
    return SAlgMorphism(name.empty() ? f.name() + "@vertex" + std::to_string(v) : name, P, f.codomain(),
                        std::move(raw));
}

}  // namespace simpforge
