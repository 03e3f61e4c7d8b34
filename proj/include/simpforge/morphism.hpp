#pragma once
// Morphisms between levelwise presentations: per-level generator assignments,
// the two certificates (alias well-definedness and simpliciality), ring-
// homomorphic evaluation, composition and exact equality up to a level bound.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "simpforge/presentation.hpp"

namespace simpforge {

class SAlgMorphism {
  public:
    SAlgMorphism() = default;
    SAlgMorphism(std::string name, PresentationPtr dom, PresentationPtr cod,
                 std::vector<std::map<VarId, Polynomial>> raw_assignment)
        : name_(std::move(name)), dom_(std::move(dom)), cod_(std::move(cod)), raw_(std::move(raw_assignment)) {
        if (!dom_ || !cod_) throw std::invalid_argument("SAlgMorphism: null endpoint");
        normalize_assignment();
    }

    // Convenience: one assignment rule for every level.
    static SAlgMorphism from_rule(std::string name, PresentationPtr dom, PresentationPtr cod, int p_max,
                                  const std::function<Polynomial(int p, const VarId&)>& rule) {
        std::vector<std::map<VarId, Polynomial>> raw(static_cast<std::size_t>(p_max) + 1);
        for (int p = 0; p <= p_max; ++p) {
            for (auto& g : dom->free_gens(p)) raw[static_cast<std::size_t>(p)][g] = rule(p, g);
            for (auto& [g, v] : dom->level(p).aliases) raw[static_cast<std::size_t>(p)][g] = rule(p, g);
        }
        return SAlgMorphism(std::move(name), std::move(dom), std::move(cod), std::move(raw));
    }

    const std::string& name() const { return name_; }
    void rename(std::string n) { name_ = std::move(n); }
    const PresentationPtr& domain() const { return dom_; }
    const PresentationPtr& codomain() const { return cod_; }
    int max_level() const { return static_cast<int>(raw_.size()) - 1; }

    // Normalized image of a free domain generator.
    const Polynomial& image(int p, const VarId& g) const {
        if (p < 0 || p > max_level()) throw std::out_of_range("SAlgMorphism::image: level not built");
        auto& m = norm_[static_cast<std::size_t>(p)];
        auto it = m.find(g);
        if (it == m.end())
            throw std::invalid_argument("SAlgMorphism::image: no assignment for " + g.str() + " in " + name_);
        return it->second;
    }

    // Raw (formula) image of any generator, free or alias.
    const Polynomial& raw_image(int p, const VarId& g) const {
        if (p < 0 || p > max_level()) throw std::out_of_range("SAlgMorphism::raw_image: level not built");
        auto& m = raw_[static_cast<std::size_t>(p)];
        auto it = m.find(g);
        if (it == m.end())
            throw std::invalid_argument("SAlgMorphism::raw_image: no assignment for " + g.str() + " in " + name_);
        return it->second;
    }

    // Ring-homomorphic extension on a level-p polynomial over the domain.
    Polynomial eval(int p, const Polynomial& x) const {
        Polynomial nx = dom_->normalize(p, x);
        Polynomial raw = nx.map_variables([&](const VarId& v) { return image(p, v); });
        return cod_->normalize(p, raw);
    }

    // Formula applied to every domain alias equals the image of its value.
    CertResult check_aliases(int p_max) const {
        for (int p = 0; p <= p_max; ++p) {
            for (auto& [g, val] : dom_->level(p).aliases) {
                Polynomial lhs = cod_->normalize(p, raw_image(p, g));
                Polynomial rhs = eval(p, val);
                if (lhs != rhs)
                    return CertResult::fail({p, "alias formula for " + name_, g.str(), lhs.str(), rhs.str()});
            }
        }
        return CertResult::pass();
    }

    // Commutation with every face and degeneracy within levels 0..p_max.
    CertResult check_simplicial(int p_max) const {
        for (int p = 0; p <= p_max; ++p) {
            for (auto& g : dom_->free_gens(p)) {
                Polynomial fg = image(p, g);
                if (p >= 1)
                    for (int i = 0; i <= p; ++i) {
                        Polynomial lhs = eval(p - 1, dom_->apply_face(p, i, Polynomial(g)));
                        Polynomial rhs = cod_->apply_face(p, i, fg);
                        if (lhs != rhs)
                            return CertResult::fail(
                                {p, name_ + " vs d_" + std::to_string(i), g.str(), lhs.str(), rhs.str()});
                    }
                if (p + 1 <= p_max)
                    for (int i = 0; i <= p; ++i) {
                        Polynomial lhs = eval(p + 1, dom_->apply_degeneracy(p, i, Polynomial(g)));
                        Polynomial rhs = cod_->apply_degeneracy(p, i, fg);
                        if (lhs != rhs)
                            return CertResult::fail(
                                {p, name_ + " vs s_" + std::to_string(i), g.str(), lhs.str(), rhs.str()});
                    }
            }
        }
        return CertResult::pass();
    }

  private:
    void normalize_assignment() {
        norm_.resize(raw_.size());
        for (int p = 0; p <= max_level(); ++p) {
            for (auto& g : dom_->free_gens(p)) {
                auto it = raw_[static_cast<std::size_t>(p)].find(g);
                if (it == raw_[static_cast<std::size_t>(p)].end())
                    throw std::invalid_argument("SAlgMorphism " + name_ + ": missing assignment for " + g.str() +
                                                " at level " + std::to_string(p));
                norm_[static_cast<std::size_t>(p)][g] = cod_->normalize(p, it->second);
            }
            // Fill alias formulas mechanically when the builder gave none.
            for (auto& [g, val] : dom_->level(p).aliases) {
                if (!raw_[static_cast<std::size_t>(p)].count(g)) {
                    Polynomial nx = dom_->normalize(p, val);
                    raw_[static_cast<std::size_t>(p)][g] =
                        cod_->normalize(p, nx.map_variables([&](const VarId& v) { return norm_[static_cast<std::size_t>(p)].at(v); }));
                }
            }
        }
    }

    std::string name_;
    PresentationPtr dom_, cod_;
    std::vector<std::map<VarId, Polynomial>> raw_;
    std::vector<std::map<VarId, Polynomial>> norm_;
};

// compose(g, f) = g after f.
inline SAlgMorphism compose(const SAlgMorphism& g, const SAlgMorphism& f, const std::string& name = "") {
    int p_max = std::min(f.max_level(), g.max_level());
    if (!f.codomain()->structure_equals(*g.domain(), p_max))
        throw std::invalid_argument("compose: codomain of " + f.name() + " differs from domain of " + g.name());
    std::vector<std::map<VarId, Polynomial>> raw(static_cast<std::size_t>(p_max) + 1);
    for (int p = 0; p <= p_max; ++p) {
        for (auto& gen : f.domain()->free_gens(p)) raw[static_cast<std::size_t>(p)][gen] = g.eval(p, f.image(p, gen));
        for (auto& [gen, val] : f.domain()->level(p).aliases)
            raw[static_cast<std::size_t>(p)][gen] =
                g.eval(p, f.codomain()->normalize(p, f.raw_image(p, gen)));
    }
    return SAlgMorphism(name.empty() ? g.name() + "." + f.name() : name, f.domain(), g.codomain(), std::move(raw));
}

inline SAlgMorphism identity_morphism(const PresentationPtr& P, int p_max, const std::string& name = "id") {
    return SAlgMorphism::from_rule(name, P, P, p_max, [](int, const VarId& g) { return Polynomial(g); });
}

// Exact equality on every free generator of every level <= p_max.
inline CertResult morphisms_equal(const SAlgMorphism& f, const SAlgMorphism& g, int p_max) {
    if (!f.domain()->structure_equals(*g.domain(), p_max))
        return CertResult::fail({0, "domains differ", "", f.domain()->name(), g.domain()->name()});
    if (!f.codomain()->structure_equals(*g.codomain(), p_max))
        return CertResult::fail({0, "codomains differ", "", f.codomain()->name(), g.codomain()->name()});
    for (int p = 0; p <= p_max; ++p)
        for (auto& gen : f.domain()->free_gens(p)) {
            const Polynomial& a = f.image(p, gen);
            const Polynomial& b = g.image(p, gen);
            if (a != b)
                return CertResult::fail({p, f.name() + " vs " + g.name(), gen.str(), a.str(), b.str()});
        }
    return CertResult::pass();
}

// Both mandatory certificates in one call.
inline CertResult certify_morphism(const SAlgMorphism& f, int p_max) {
    CertResult a = f.check_aliases(p_max);
    if (!a.ok) return a;
    return f.check_simplicial(p_max);
}

// pi := c on every assignment; endpoints are replaced by the given
// specializations (which may be the original presentations).
inline SAlgMorphism specialize_pi(const SAlgMorphism& f, const Int& c, PresentationPtr dom, PresentationPtr cod) {
    std::vector<std::map<VarId, Polynomial>> raw(static_cast<std::size_t>(f.max_level()) + 1);
    for (int p = 0; p <= f.max_level(); ++p) {
        for (auto& g : f.domain()->free_gens(p)) raw[static_cast<std::size_t>(p)][g] = f.raw_image(p, g).specialize_pi(c);
        for (auto& [g, v] : f.domain()->level(p).aliases)
            raw[static_cast<std::size_t>(p)][g] = f.raw_image(p, g).specialize_pi(c);
    }
    return SAlgMorphism(f.name() + "|pi=" + c.str(), std::move(dom), std::move(cod), std::move(raw));
}

}  // namespace simpforge
