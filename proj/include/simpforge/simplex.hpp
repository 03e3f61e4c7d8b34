#pragma once
// The simplex category: order-preserving maps [p] -> [n], the coface and
// codegeneracy generators delta/sigma with their relations, enumeration of
// all maps [p] -> [n], and the counting functions m_alpha / s_alpha.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace simpforge {

// An order-preserving map [p] -> [n], stored as its value list.
struct MonotoneMap {
    int target = 0;           // n
    std::vector<int> values;  // length p+1, weakly increasing, entries in [n]

    MonotoneMap() = default;
    MonotoneMap(std::vector<int> vals, int n) : target(n), values(std::move(vals)) {
        if (values.empty()) throw std::invalid_argument("MonotoneMap: empty value list");
        int prev = 0;
        for (std::size_t k = 0; k < values.size(); ++k) {
            int v = values[k];
            if (v < 0 || v > target) throw std::invalid_argument("MonotoneMap: value out of range");
            if (k > 0 && v < prev) throw std::invalid_argument("MonotoneMap: values not weakly increasing");
            prev = v;
        }
    }

    int source() const { return static_cast<int>(values.size()) - 1; }  // p
    int operator()(int j) const {
        if (j < 0 || j >= static_cast<int>(values.size()))
            throw std::out_of_range("MonotoneMap: argument out of range");
        return values[static_cast<std::size_t>(j)];
    }

    friend bool operator==(const MonotoneMap& x, const MonotoneMap& y) {
        return x.target == y.target && x.values == y.values;
    }
    friend bool operator!=(const MonotoneMap& x, const MonotoneMap& y) { return !(x == y); }
    friend bool operator<(const MonotoneMap& x, const MonotoneMap& y) {
        if (x.source() != y.source()) return x.source() < y.source();
        if (x.target != y.target) return x.target < y.target;
        return x.values < y.values;
    }

    // Textual form `(v0,v1,...,vp):[p]->[n]`.
    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (k) os << ',';
            os << values[k];
        }
        os << "):[" << source() << "]->[" << target << ']';
        return os.str();
    }
};

inline MonotoneMap identity_map(int n) {
    std::vector<int> v(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(j)] = j;
    return MonotoneMap(std::move(v), n);
}

inline MonotoneMap constant_map(int p, int value, int n) {
    if (value < 0 || value > n) throw std::invalid_argument("constant_map: value out of range");
    return MonotoneMap(std::vector<int>(static_cast<std::size_t>(p) + 1, value), n);
}

// delta(n,i): the injective map [n-1] -> [n] whose image misses i.
inline MonotoneMap delta(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw std::out_of_range("delta: index out of range");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int j = 0; j <= n - 1; ++j) v[static_cast<std::size_t>(j)] = (j < i) ? j : j + 1;
    return MonotoneMap(std::move(v), n);
}

// sigma(n,i): the surjective map [n+1] -> [n] hitting i twice.
inline MonotoneMap sigma(int n, int i) {
    if (n < 0 || i < 0 || i > n) throw std::out_of_range("sigma: index out of range");
    std::vector<int> v(static_cast<std::size_t>(n) + 2);
    for (int j = 0; j <= n + 1; ++j) v[static_cast<std::size_t>(j)] = (j <= i) ? j : j - 1;
    return MonotoneMap(std::move(v), n);
}

// compose(g, f) = g after f; requires f.target == g.source().
inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
    if (f.target != g.source())
        throw std::invalid_argument("compose: endpoint mismatch (" + f.str() + " then " + g.str() + ")");
    std::vector<int> v(f.values.size());
    for (std::size_t j = 0; j < f.values.size(); ++j) v[j] = g(f.values[j]);
    return MonotoneMap(std::move(v), g.target);
}

// All weakly increasing (p+1)-tuples in [n], in lexicographic order.
inline std::vector<MonotoneMap> enumerate_maps(int p, int n) {
    if (p < 0 || n < 0) throw std::invalid_argument("enumerate_maps: negative dimension");
    std::vector<MonotoneMap> out;
    std::vector<int> cur(static_cast<std::size_t>(p) + 1, 0);
    while (true) {
        out.emplace_back(cur, n);
        int k = p;
        while (k >= 0 && cur[static_cast<std::size_t>(k)] == n) --k;
        if (k < 0) break;
        int v = ++cur[static_cast<std::size_t>(k)];
        for (int j = k + 1; j <= p; ++j) cur[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

// m_alpha(k) = #alpha^{-1}(k), with m_alpha(-1) = 0.
inline int m_alpha(const MonotoneMap& alpha, int k) {
    if (k < -1 || k > alpha.target) throw std::out_of_range("m_alpha: k out of range");
    int c = 0;
    for (int v : alpha.values) c += (v == k) ? 1 : 0;
    return c;
}

// s_alpha(k) = #{ j in [p] : alpha(j) <= k }, with s_alpha(-1) = 0.
inline int s_alpha(const MonotoneMap& alpha, int k) {
    if (k < -1 || k > alpha.target) throw std::out_of_range("s_alpha: k out of range");
    int c = 0;
    for (int v : alpha.values) c += (v <= k) ? 1 : 0;
    return c;
}

// The unique k in [n] with s_alpha(k-1) <= i <= s_alpha(k) - 1; this is alpha(i).
inline int s_alpha_window(const MonotoneMap& alpha, int i) {
    if (i < 0 || i > alpha.source()) throw std::out_of_range("s_alpha_window: i out of range");
    for (int k = 0; k <= alpha.target; ++k)
        if (s_alpha(alpha, k - 1) <= i && i <= s_alpha(alpha, k) - 1) return k;
    throw std::logic_error("s_alpha_window: no window found");
}

struct SimplexCheck {
    bool ok = true;
    std::string detail;  // first counterexample, when ok == false

    static SimplexCheck pass() { return {}; }
    static SimplexCheck fail(std::string d) { return {false, std::move(d)}; }
};

// The five coface/codegeneracy relations, all admissible indices with every
// superscript <= n_max.
inline SimplexCheck check_simplex_relations(int n_max) {
    if (n_max < 1) throw std::invalid_argument("check_simplex_relations: n_max must be positive");
    auto mismatch = [](const char* rel, int n, int i, int j, const MonotoneMap& l, const MonotoneMap& r) {
        std::ostringstream os;
        os << rel << " fails at n=" << n << " i=" << i << " j=" << j << ": " << l.str() << " vs " << r.str();
        return SimplexCheck::fail(os.str());
    };
    for (int n = 1; n + 1 <= n_max; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n + 1; ++j) {
                auto l = compose(delta(n + 1, j), delta(n, i));
                auto r = compose(delta(n + 1, i), delta(n, j - 1));
                if (l != r) return mismatch("delta_j.delta_i = delta_i.delta_{j-1}", n, i, j, l, r);
            }
    for (int n = 2; n <= n_max; ++n)
        for (int j = 1; j <= n - 1; ++j)
            for (int i = 0; i < j; ++i) {
                auto l = compose(sigma(n - 1, j), delta(n, i));
                auto r = compose(delta(n - 1, i), sigma(n - 2, j - 1));
                if (l != r) return mismatch("sigma_j.delta_i = delta_i.sigma_{j-1}", n, i, j, l, r);
            }
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i <= n - 1; ++i) {
            auto id = identity_map(n - 1);
            auto l = compose(sigma(n - 1, i), delta(n, i));
            auto r = compose(sigma(n - 1, i), delta(n, i + 1));
            if (l != id) return mismatch("sigma_i.delta_i = id", n, i, i, l, id);
            if (r != id) return mismatch("sigma_i.delta_{i+1} = id", n, i, i + 1, r, id);
        }
    for (int n = 2; n <= n_max; ++n)
        for (int j = 0; j <= n - 2; ++j)
            for (int i = j + 2; i <= n; ++i) {
                auto l = compose(sigma(n - 1, j), delta(n, i));
                auto r = compose(delta(n - 1, i - 1), sigma(n - 2, j));
                if (l != r) return mismatch("sigma_j.delta_i = delta_{i-1}.sigma_j", n, i, j, l, r);
            }
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i <= n - 1; ++i)
            for (int j = i; j <= n - 1; ++j) {
                auto l = compose(sigma(n - 1, j), sigma(n, i));
                auto r = compose(sigma(n - 1, i), sigma(n, j + 1));
                if (l != r) return mismatch("sigma_j.sigma_i = sigma_i.sigma_{j+1}", n, i, j, l, r);
            }
    return SimplexCheck::pass();
}

// Case formulas for s_{alpha.sigma^p_i} and s_{alpha.delta^p_i} against direct
// composition, for one (alpha, i).
inline SimplexCheck s_alpha_transformation_check(const MonotoneMap& alpha, int i) {
    int p = alpha.source();
    int n = alpha.target;
    if (i < 0 || i > p) throw std::out_of_range("s_alpha_transformation_check: i out of range");
    int k = s_alpha_window(alpha, i);
    auto as = compose(alpha, sigma(p, i));
    for (int u = 0; u <= n; ++u) {
        int expect = (u <= k - 1) ? s_alpha(alpha, u) : s_alpha(alpha, u) + 1;
        if (s_alpha(as, u) != expect) {
            std::ostringstream os;
            os << "sigma case fails for alpha=" << alpha.str() << " i=" << i << " u=" << u << ": got "
               << s_alpha(as, u) << ", formula " << expect;
            return SimplexCheck::fail(os.str());
        }
    }
    if (p >= 1) {
        auto ad = compose(alpha, delta(p, i));
        for (int u = 0; u <= n; ++u) {
            int expect = (u <= k - 1) ? s_alpha(alpha, u) : s_alpha(alpha, u) - 1;
            if (s_alpha(ad, u) != expect) {
                std::ostringstream os;
                os << "delta case fails for alpha=" << alpha.str() << " i=" << i << " u=" << u << ": got "
                   << s_alpha(ad, u) << ", formula " << expect;
                return SimplexCheck::fail(os.str());
            }
        }
    }
    return SimplexCheck::pass();
}

// Epi-mono factorization of alpha as a word in the generators; test utility.
// The word is applied right to left: alpha = delta(...) o ... o sigma(...).
struct GeneratorWord {
    // (is_delta, n, i) entries, outermost first.
    std::vector<std::tuple<bool, int, int>> letters;
};

inline GeneratorWord decompose(const MonotoneMap& alpha) {
    GeneratorWord w;
    MonotoneMap cur = alpha;
    // Peel cofaces off the left: cur = delta(n, v) o cur' whenever v is missed.
    std::size_t delta_end = 0;
    for (;;) {
        int p = cur.source(), n = cur.target;
        if (p == n && cur == identity_map(n)) return w;
        std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
        for (int v : cur.values) hit[static_cast<std::size_t>(v)] = true;
        int miss = -1;
        for (int v = n; v >= 0; --v)
            if (!hit[static_cast<std::size_t>(v)]) { miss = v; break; }
        if (miss < 0) break;
        w.letters.emplace_back(true, n, miss);
        ++delta_end;
        std::vector<int> vals = cur.values;
        for (int& v : vals)
            if (v > miss) --v;
        cur = MonotoneMap(std::move(vals), n - 1);
    }
    // cur is now surjective; peel codegeneracies off the right:
    // cur = cur' o sigma(p-1, j) whenever cur(j) == cur(j+1).
    std::vector<std::tuple<bool, int, int>> sigmas;  // innermost first
    for (;;) {
        int p = cur.source(), n = cur.target;
        if (p == n) break;
        int rep = -1;
        for (int j = 0; j < p; ++j)
            if (cur.values[static_cast<std::size_t>(j)] == cur.values[static_cast<std::size_t>(j) + 1]) { rep = j; break; }
        if (rep < 0) throw std::logic_error("decompose: non-surjective map after coface peeling");
        sigmas.emplace_back(false, p - 1, rep);
        std::vector<int> vals = cur.values;
        vals.erase(vals.begin() + rep);
        cur = MonotoneMap(std::move(vals), n);
    }
    for (auto it = sigmas.rbegin(); it != sigmas.rend(); ++it) w.letters.push_back(*it);
    return w;
}

inline MonotoneMap recompose(const GeneratorWord& w, int p, int n) {
    MonotoneMap acc = identity_map(p);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        auto [is_delta, dim, i] = *it;
        acc = compose(is_delta ? delta(dim, i) : sigma(dim, i), acc);
    }
    if (acc.target != n) throw std::logic_error("recompose: target mismatch");
    return acc;
}

}  // namespace simpforge
