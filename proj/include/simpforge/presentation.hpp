#pragma once
// Levelwise presentations of simplicial commutative Z[pi]-algebras.
//
// A presentation stores, for every level p up to a build bound: the free
// generators, the boundary aliases (generators identified with polynomials in
// the free ones, e.g. t^(0) = pi^m and t^(p+1) = 0), and the face/degeneracy
// generator maps. Quotient rings never appear as ideals; aliases are applied
// eagerly and every stored polynomial is a normal form over free generators.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "simpforge/poly.hpp"

namespace simpforge {

struct Counterexample {
    int level = 0;
    std::string index;      // which face/degeneracy/relation instance
    std::string generator;  // which generator witnessed the failure
    std::string lhs;
    std::string rhs;

    std::string str() const {
        std::ostringstream os;
        os << "level " << level;
        if (!index.empty()) os << ", " << index;
        if (!generator.empty()) os << ", generator " << generator;
        os << ": " << lhs << "  !=  " << rhs;
        return os.str();
    }
};

struct CertResult {
    bool ok = true;
    std::optional<Counterexample> ce;

    static CertResult pass() { return {}; }
    static CertResult fail(Counterexample c) { return {false, std::move(c)}; }
    std::string str() const { return ok ? "pass" : ce->str(); }
};

struct LevelData {
    std::vector<VarId> free_gens;
    std::map<VarId, Polynomial> aliases;  // alias generator -> normal form over free gens
    // Raw images of every generator (free and alias) under d_i / s_i, written
    // in the target level's free or alias generators.
    std::vector<std::map<VarId, Polynomial>> face;
    std::vector<std::map<VarId, Polynomial>> degeneracy;
};

class SAlgPresentation {
  public:
    SAlgPresentation(std::string name, std::vector<LevelData> levels)
        : name_(std::move(name)), levels_(std::move(levels)) {
        if (levels_.empty()) throw std::invalid_argument("SAlgPresentation: no levels");
    }

    const std::string& name() const { return name_; }
    int max_level() const { return static_cast<int>(levels_.size()) - 1; }

    const LevelData& level(int p) const {
        if (p < 0 || p > max_level())
            throw std::out_of_range("SAlgPresentation::level: level " + std::to_string(p) + " not built for " + name_);
        return levels_[static_cast<std::size_t>(p)];
    }

    const std::vector<VarId>& free_gens(int p) const { return level(p).free_gens; }

    bool is_free(int p, const VarId& v) const {
        for (auto& g : level(p).free_gens)
            if (g == v) return true;
        return false;
    }

    const Polynomial* alias_value(int p, const VarId& v) const {
        auto& al = level(p).aliases;
        auto it = al.find(v);
        return it == al.end() ? nullptr : &it->second;
    }

    // Substitute aliases so the result mentions free generators only.
    Polynomial normalize(int p, const Polynomial& x) const {
        const LevelData& L = level(p);
        return x.map_variables([&](const VarId& v) -> Polynomial {
            auto it = L.aliases.find(v);
            if (it != L.aliases.end()) return it->second;
            if (!is_free(p, v))
                throw std::invalid_argument("normalize: unknown generator " + v.str() + " at level " +
                                            std::to_string(p) + " of " + name_);
            return Polynomial(v);
        });
    }

    // Raw image of one generator (free or alias) under d_i at level p.
    const Polynomial& face_raw(int p, int i, const VarId& v) const {
        const LevelData& L = level(p);
        if (i < 0 || i >= static_cast<int>(L.face.size()))
            throw std::out_of_range("face index " + std::to_string(i) + " at level " + std::to_string(p));
        auto& m = L.face[static_cast<std::size_t>(i)];
        auto it = m.find(v);
        if (it == m.end()) throw std::invalid_argument("face_raw: no image for " + v.str());
        return it->second;
    }

    const Polynomial& degeneracy_raw(int p, int i, const VarId& v) const {
        const LevelData& L = level(p);
        if (i < 0 || i >= static_cast<int>(L.degeneracy.size()))
            throw std::out_of_range("degeneracy index " + std::to_string(i) + " at level " + std::to_string(p));
        auto& m = L.degeneracy[static_cast<std::size_t>(i)];
        auto it = m.find(v);
        if (it == m.end()) throw std::invalid_argument("degeneracy_raw: no image for " + v.str());
        return it->second;
    }

    // Ring-homomorphic extension of d_i to a normalized level-p polynomial.
    Polynomial apply_face(int p, int i, const Polynomial& x) const {
        Polynomial raw = x.map_variables([&](const VarId& v) { return face_raw(p, i, v); });
        return normalize(p - 1, raw);
    }

    Polynomial apply_degeneracy(int p, int i, const Polynomial& x) const {
        Polynomial raw = x.map_variables([&](const VarId& v) { return degeneracy_raw(p, i, v); });
        return normalize(p + 1, raw);
    }

    bool structure_equals(const SAlgPresentation& o, int p_max) const {
        if (this == &o) return p_max <= max_level();
        if (p_max > max_level() || p_max > o.max_level()) return false;
        for (int p = 0; p <= p_max; ++p) {
            const LevelData& a = level(p);
            const LevelData& b = o.level(p);
            if (a.free_gens != b.free_gens || a.aliases != b.aliases) return false;
            for (int i = 0; i <= p; ++i) {
                for (auto& g : a.free_gens) {
                    if (p >= 1 && normalize(p - 1, face_raw(p, i, g)) != o.normalize(p - 1, o.face_raw(p, i, g)))
                        return false;
                    if (p + 1 <= p_max &&
                        normalize(p + 1, degeneracy_raw(p, i, g)) != o.normalize(p + 1, o.degeneracy_raw(p, i, g)))
                        return false;
                }
            }
        }
        return true;
    }

    std::string dump(int p_max) const;

  private:
    std::string name_;
    std::vector<LevelData> levels_;
};

using PresentationPtr = std::shared_ptr<const SAlgPresentation>;

// Declarative scheme; build_presentation materializes levels 0..p_max.
struct PresentationScheme {
    std::string name;
    std::function<std::vector<VarId>(int p)> free_gens;
    // Alias generators with raw values (normalized during the build).
    std::function<std::vector<std::pair<VarId, Polynomial>>(int p)> aliases;
    // Raw d_i / s_i images of every generator, free or alias.
    std::function<Polynomial(int p, int i, const VarId&)> face;
    std::function<Polynomial(int p, int i, const VarId&)> degeneracy;
};

inline SAlgPresentation build_presentation(const PresentationScheme& s, int p_max) {
    if (p_max < 0) throw std::invalid_argument("build_presentation: negative level bound");
    std::vector<LevelData> levels(static_cast<std::size_t>(p_max) + 1);
    for (int p = 0; p <= p_max; ++p) {
        LevelData& L = levels[static_cast<std::size_t>(p)];
        L.free_gens = s.free_gens(p);
        for (auto& [v, val] : s.aliases(p)) L.aliases.emplace(v, val);
        // Normalize alias values against this level's own aliases (a value may
        // mention another alias, e.g. u_c -> t_1 next to u_a -> t_{a+1}).
        bool changed = true;
        int guard = 0;
        while (changed) {
            changed = false;
            if (++guard > 8) throw std::logic_error("build_presentation: alias values do not settle for " + s.name);
            for (auto& [v, val] : L.aliases) {
                Polynomial n = val.map_variables([&](const VarId& w) -> Polynomial {
                    auto it = L.aliases.find(w);
                    return it != L.aliases.end() ? it->second : Polynomial(w);
                });
                if (n != val) {
                    val = n;
                    changed = true;
                }
            }
        }
        L.face.resize(p >= 1 ? static_cast<std::size_t>(p) + 1 : 0);  // no faces out of level 0
        L.degeneracy.resize(static_cast<std::size_t>(p) + 1);
        for (int i = 0; i <= p; ++i) {
            for (auto& g : L.free_gens) {
                if (p >= 1) L.face[static_cast<std::size_t>(i)][g] = s.face(p, i, g);
                L.degeneracy[static_cast<std::size_t>(i)][g] = s.degeneracy(p, i, g);
            }
            for (auto& [g, val] : L.aliases) {
                if (p >= 1) L.face[static_cast<std::size_t>(i)][g] = s.face(p, i, g);
                L.degeneracy[static_cast<std::size_t>(i)][g] = s.degeneracy(p, i, g);
            }
        }
    }
    return SAlgPresentation(s.name, std::move(levels));
}

// The five simplicial identities on every free generator at every level whose
// composites stay within 0..p_max, plus alias compatibility of d_i and s_i.
inline CertResult check_presentation(const SAlgPresentation& P, int p_max) {
    if (p_max < 0 || p_max > P.max_level())
        throw std::invalid_argument("check_presentation: bound exceeds built levels of " + P.name());
    auto fail = [&](int level, std::string idx, const VarId& g, const Polynomial& l, const Polynomial& r) {
        return CertResult::fail({level, std::move(idx), g.str(), l.str(), r.str()});
    };

    for (int p = 0; p <= p_max; ++p) {
        // Alias compatibility: the raw image of an alias generator must agree
        // with the image of its value.
        for (auto& [g, val] : P.level(p).aliases) {
            for (int i = 0; i <= p; ++i) {
                if (p >= 1) {
                    Polynomial lhs = P.normalize(p - 1, P.face_raw(p, i, g));
                    Polynomial rhs = P.apply_face(p, i, val);
                    if (lhs != rhs) return fail(p, "alias under d_" + std::to_string(i), g, lhs, rhs);
                }
                if (p + 1 <= p_max) {
                    Polynomial lhs = P.normalize(p + 1, P.degeneracy_raw(p, i, g));
                    Polynomial rhs = P.apply_degeneracy(p, i, val);
                    if (lhs != rhs) return fail(p, "alias under s_" + std::to_string(i), g, lhs, rhs);
                }
            }
        }
        for (auto& g : P.free_gens(p)) {
            Polynomial x(g);
            // (1) d_i d_j = d_{j-1} d_i, i < j
            if (p >= 2)
                for (int j = 1; j <= p; ++j)
                    for (int i = 0; i < j; ++i) {
                        Polynomial l = P.apply_face(p - 1, i, P.apply_face(p, j, x));
                        Polynomial r = P.apply_face(p - 1, j - 1, P.apply_face(p, i, x));
                        if (l != r)
                            return fail(p, "d_" + std::to_string(i) + " d_" + std::to_string(j), g, l, r);
                    }
            if (p + 1 <= p_max) {
                for (int j = 0; j <= p; ++j) {
                    Polynomial sjx = P.apply_degeneracy(p, j, x);
                    // (2) d_i s_j = s_{j-1} d_i, i < j
                    for (int i = 0; i < j; ++i) {
                        Polynomial l = P.apply_face(p + 1, i, sjx);
                        Polynomial r = (p >= 1) ? P.apply_degeneracy(p - 1, j - 1, P.apply_face(p, i, x))
                                                : Polynomial();
                        if (p >= 1 && l != r)
                            return fail(p, "d_" + std::to_string(i) + " s_" + std::to_string(j), g, l, r);
                    }
                    // (3) d_j s_j = id = d_{j+1} s_j
                    {
                        Polynomial l = P.apply_face(p + 1, j, sjx);
                        Polynomial r = P.apply_face(p + 1, j + 1, sjx);
                        if (l != x) return fail(p, "d_" + std::to_string(j) + " s_" + std::to_string(j), g, l, x);
                        if (r != x)
                            return fail(p, "d_" + std::to_string(j + 1) + " s_" + std::to_string(j), g, r, x);
                    }
                    // (4) d_i s_j = s_j d_{i-1}, i > j+1
                    for (int i = j + 2; i <= p + 1; ++i) {
                        Polynomial l = P.apply_face(p + 1, i, sjx);
                        Polynomial r = P.apply_degeneracy(p - 1, j, P.apply_face(p, i - 1, x));
                        if (l != r)
                            return fail(p, "d_" + std::to_string(i) + " s_" + std::to_string(j), g, l, r);
                    }
                }
            }
            // (5) s_i s_j = s_{j+1} s_i, i <= j
            if (p + 2 <= p_max)
                for (int j = 0; j <= p; ++j)
                    for (int i = 0; i <= j; ++i) {
                        Polynomial l = P.apply_degeneracy(p + 1, i, P.apply_degeneracy(p, j, x));
                        Polynomial r = P.apply_degeneracy(p + 1, j + 1, P.apply_degeneracy(p, i, x));
                        if (l != r)
                            return fail(p, "s_" + std::to_string(i) + " s_" + std::to_string(j), g, l, r);
                    }
        }
    }
    return CertResult::pass();
}

inline std::string SAlgPresentation::dump(int p_max) const {
    std::ostringstream os;
    os << "presentation " << name_ << "\n";
    for (int p = 0; p <= p_max && p <= max_level(); ++p) {
        const LevelData& L = level(p);
        os << "level " << p << "\n  free:";
        if (L.free_gens.empty()) os << " (none)";
        for (auto& g : L.free_gens) os << ' ' << g.str();
        os << "\n";
        for (auto& [g, v] : L.aliases) os << "  alias " << g.str() << " = " << v.str() << "\n";
        for (int i = 0; i <= p; ++i) {
            if (p >= 1)
                for (auto& g : L.free_gens)
                    os << "  d_" << i << ' ' << g.str() << " = " << normalize(p - 1, face_raw(p, i, g)).str() << "\n";
            if (p + 1 <= max_level())
                for (auto& g : L.free_gens)
                    os << "  s_" << i << ' ' << g.str() << " = " << normalize(p + 1, degeneracy_raw(p, i, g)).str()
                       << "\n";
        }
    }
    return os.str();
}

// pi := 0 (or any integer) applied to every alias and structure map; the
// result is a presentation over the specialized coefficients.
inline SAlgPresentation specialize_pi(const SAlgPresentation& P, const Int& c, const std::string& suffix = "|pi=0") {
    std::vector<LevelData> levels;
    for (int p = 0; p <= P.max_level(); ++p) {
        LevelData L = P.level(p);
        for (auto& [g, v] : L.aliases) v = v.specialize_pi(c);
        for (auto& m : L.face)
            for (auto& [g, v] : m) v = v.specialize_pi(c);
        for (auto& m : L.degeneracy)
            for (auto& [g, v] : m) v = v.specialize_pi(c);
        levels.push_back(std::move(L));
    }
    return SAlgPresentation(P.name() + suffix, std::move(levels));
}

}  // namespace simpforge
