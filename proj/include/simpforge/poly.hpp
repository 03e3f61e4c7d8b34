#pragma once
// Exact sparse multivariate polynomials over Z with pi as a distinguished
// variable and structured variable descriptors for the generator families.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simpforge/simplex.hpp"

namespace simpforge {

using Int = boost::multiprecision::cpp_int;

enum class Family : std::uint8_t { T = 0, U = 1, EPS = 2 };

inline char family_char(Family f) {
    switch (f) {
        case Family::T: return 't';
        case Family::U: return 'u';
        case Family::EPS: return 'e';
    }
    throw std::logic_error("family_char: bad family");
}

// A generator name: family tag, bar superscript j, tensor-factor subscript a,
// and an ordered list of simplex labels (innermost tensoring first).
struct VarId {
    Family family = Family::T;
    int bar_index = 0;              // the superscript (j), >= 0
    int factor = 1;                 // the subscript a, >= 1
    std::vector<MonotoneMap> labels;

    VarId() = default;
    VarId(Family f, int j, int a, std::vector<MonotoneMap> ls = {})
        : family(f), bar_index(j), factor(a), labels(std::move(ls)) {
        if (bar_index < 0) throw std::invalid_argument("VarId: negative bar index");
        if (factor < 1) throw std::invalid_argument("VarId: factor must be positive");
    }

    friend bool operator==(const VarId& x, const VarId& y) {
        return x.family == y.family && x.bar_index == y.bar_index && x.factor == y.factor && x.labels == y.labels;
    }
    friend bool operator!=(const VarId& x, const VarId& y) { return !(x == y); }
    // Total order: lexicographic on (family, factor, bar_index, labels).
    friend bool operator<(const VarId& x, const VarId& y) {
        if (x.family != y.family) return x.family < y.family;
        if (x.factor != y.factor) return x.factor < y.factor;
        if (x.bar_index != y.bar_index) return x.bar_index < y.bar_index;
        return x.labels < y.labels;
    }

    std::string str() const {
        std::ostringstream os;
        os << family_char(family) << '[' << bar_index << ',' << factor << ']';
        if (!labels.empty()) {
            os << "(a=";
            for (std::size_t k = 0; k < labels.size(); ++k) {
                if (k) os << ',';
                os << '(';
                for (std::size_t j = 0; j < labels[k].values.size(); ++j) {
                    if (j) os << ',';
                    os << labels[k].values[j];
                }
                os << ")->" << labels[k].target;
            }
            os << ')';
        }
        return os.str();
    }
};

inline VarId with_label(const VarId& v, const MonotoneMap& alpha) {
    VarId w = v;
    w.labels.push_back(alpha);
    return w;
}

// pi^e * prod v^{e_v}; no variable maps to exponent zero.
struct Monomial {
    int pi_exponent = 0;
    std::map<VarId, int> var_exponents;

    Monomial() = default;
    explicit Monomial(int pi_exp) : pi_exponent(pi_exp) {
        if (pi_exp < 0) throw std::invalid_argument("Monomial: negative pi exponent");
    }

    int total_degree() const {
        int d = pi_exponent;
        for (auto& [v, e] : var_exponents) d += e;
        return d;
    }
    bool is_one() const { return pi_exponent == 0 && var_exponents.empty(); }

    friend bool operator==(const Monomial& x, const Monomial& y) {
        return x.pi_exponent == y.pi_exponent && x.var_exponents == y.var_exponents;
    }
    friend bool operator!=(const Monomial& x, const Monomial& y) { return !(x == y); }
    // Graded lexicographic, variables before pi within a degree class.
    friend bool operator<(const Monomial& x, const Monomial& y) {
        if (x.total_degree() != y.total_degree()) return x.total_degree() < y.total_degree();
        auto xi = x.var_exponents.begin(), yi = y.var_exponents.begin();
        while (xi != x.var_exponents.end() && yi != y.var_exponents.end()) {
            if (xi->first != yi->first) return yi->first < xi->first;  // earlier variable => larger monomial
            if (xi->second != yi->second) return xi->second < yi->second;
            ++xi, ++yi;
        }
        if (xi != x.var_exponents.end()) return false;
        if (yi != y.var_exponents.end()) return true;
        return x.pi_exponent < y.pi_exponent;
    }

    Monomial times(const Monomial& o) const {
        Monomial r = *this;
        r.pi_exponent += o.pi_exponent;
        for (auto& [v, e] : o.var_exponents) {
            int& cur = r.var_exponents[v];
            cur += e;
            if (cur == 0) r.var_exponents.erase(v);
        }
        return r;
    }
};

inline Monomial monomial_of(const VarId& v, int e = 1) {
    Monomial m;
    if (e < 0) throw std::invalid_argument("monomial_of: negative exponent");
    if (e > 0) m.var_exponents[v] = e;
    return m;
}

// t_weight * (total non-pi exponent) + pi exponent.
inline int weight(const Monomial& m, int t_weight) {
    if (t_weight < 1) throw std::invalid_argument("weight: t_weight must be positive");
    int d = 0;
    for (auto& [v, e] : m.var_exponents) d += e;
    return t_weight * d + m.pi_exponent;
}

// Sparse polynomial: finitely many monomials with nonzero integer coefficients.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Int& c) {  // NOLINT: implicit by design for constants
        if (c != 0) terms_[Monomial{}] = c;
    }
    Polynomial(int c) : Polynomial(Int(c)) {}
    Polynomial(const Monomial& m, Int c = 1) {
        if (c != 0) terms_[m] = std::move(c);
    }
    explicit Polynomial(const VarId& v) { terms_[monomial_of(v)] = 1; }

    static Polynomial pi(int e = 1) { return Polynomial(Monomial(e)); }
    static Polynomial var(const VarId& v) { return Polynomial(v); }

    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Polynomial& x, const Polynomial& y) { return !(x == y); }

    Polynomial& operator+=(const Polynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r;
        for (auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
        Polynomial r(1);
        for (int k = 0; k < e; ++k) r *= *this;
        return r;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Simultaneous substitution; unmapped variables are fixed.
    Polynomial substitute(const std::map<VarId, Polynomial>& sub) const {
        Polynomial out;
        for (auto& [m, c] : terms_) {
            Polynomial term(Monomial(m.pi_exponent), c);
            for (auto& [v, e] : m.var_exponents) {
                auto it = sub.find(v);
                if (it == sub.end())
                    term *= Polynomial(monomial_of(v, e));
                else
                    term *= it->second.pow(e);
            }
            out += term;
        }
        return out;
    }

    // Replace every variable by its image under f; variables with no image
    // are reported through on_missing (which may provide a fallback).
    template <class Fn>
    Polynomial map_variables(Fn&& image_of) const {
        Polynomial out;
        for (auto& [m, c] : terms_) {
            Polynomial term(Monomial(m.pi_exponent), c);
            for (auto& [v, e] : m.var_exponents) term *= image_of(v).pow(e);
            out += term;
        }
        return out;
    }

    Polynomial specialize_pi(const Int& c) const {
        Polynomial out;
        for (auto& [m, coef] : terms_) {
            Monomial m0 = m;
            m0.pi_exponent = 0;
            Int scale = 1;
            for (int k = 0; k < m.pi_exponent; ++k) scale *= c;
            out.add_term(m0, coef * scale);
        }
        return out;
    }

    // True when every monomial has the same weight; weight_out receives it.
    bool weight_homogeneous(int t_weight, int* weight_out = nullptr) const {
        bool first = true;
        int w = 0;
        for (auto& [m, c] : terms_) {
            int wm = weight(m, t_weight);
            if (first) {
                w = wm;
                first = false;
            } else if (wm != w) {
                return false;
            }
        }
        if (weight_out) *weight_out = first ? -1 : w;  // -1 marks the zero polynomial
        return true;
    }

    bool divisible_by_pi() const {
        for (auto& [m, c] : terms_)
            if (m.pi_exponent == 0) return false;
        return true;
    }

    std::vector<VarId> variables() const {
        std::vector<VarId> out;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.var_exponents)
                if (out.empty() || !(out.back() == v)) {
                    bool seen = false;
                    for (auto& u : out)
                        if (u == v) { seen = true; break; }
                    if (!seen) out.push_back(v);
                }
        return out;
    }

    std::string str() const;

  private:
    std::map<Monomial, Int> terms_;
};

inline Polynomial operator*(const Int& c, const Polynomial& p) { return Polynomial(c) * p; }

enum class PolyOp { add, sub, mul };

inline Polynomial poly_arith(const Polynomial& lhs, const Polynomial& rhs, PolyOp op) {
    switch (op) {
        case PolyOp::add: return lhs + rhs;
        case PolyOp::sub: return lhs - rhs;
        case PolyOp::mul: return lhs * rhs;
    }
    throw std::logic_error("poly_arith: bad op");
}

inline Polynomial substitute(const Polynomial& p, const std::map<VarId, Polynomial>& sub) {
    return p.substitute(sub);
}

inline Polynomial specialize_pi(const Polynomial& p, const Int& c) { return p.specialize_pi(c); }

// ---------------------------------------------------------------------------
// Canonical textual form, e.g. `3*pi^2*t[1,2](a=(0,0,1)->1) - u[2,1]`.
// Terms are emitted largest monomial first.

inline std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Int c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Int ab = neg ? Int(-c) : c;
        std::vector<std::string> factors;
        if (ab != 1 || m.is_one()) factors.push_back(ab.str());
        if (m.pi_exponent == 1)
            factors.push_back("pi");
        else if (m.pi_exponent > 1)
            factors.push_back("pi^" + std::to_string(m.pi_exponent));
        for (auto& [v, e] : m.var_exponents) {
            std::string f = v.str();
            if (e > 1) f += "^" + std::to_string(e);
            factors.push_back(f);
        }
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k) os << '*';
            os << factors[k];
        }
    }
    return os.str();
}

namespace detail {

class PolyParser {
  public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    Polynomial parse() {
        Polynomial acc;
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        for (;;) {
            Polynomial t = parse_term();
            acc += neg ? -t : t;
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = get();
            if (c == '+')
                neg = false;
            else if (c == '-')
                neg = true;
            else
                throw std::invalid_argument("polynomial parse: unexpected '" + std::string(1, c) + "'");
        }
        return acc;
    }

  private:
    Polynomial parse_term() {
        Int coef = 1;
        Monomial m;
        bool any = false;
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coef *= parse_int();
                any = true;
            } else if (c == 'p') {
                expect_word("pi");
                m.pi_exponent += parse_opt_exponent();
                any = true;
            } else if (c == 't' || c == 'u' || c == 'e') {
                VarId v = parse_var();
                int e = parse_opt_exponent();
                int& cur = m.var_exponents[v];
                cur += e;
                if (cur == 0) m.var_exponents.erase(v);
                any = true;
            } else {
                break;
            }
            skip_ws();
            if (pos_ < s_.size() && peek() == '*') {
                get();
                continue;
            }
            break;
        }
        if (!any) throw std::invalid_argument("polynomial parse: empty term");
        return Polynomial(m, coef);
    }

    VarId parse_var() {
        char f = get();
        Family fam = f == 't' ? Family::T : (f == 'u' ? Family::U : Family::EPS);
        expect('[');
        int j = static_cast<int>(parse_int());
        expect(',');
        int a = static_cast<int>(parse_int());
        expect(']');
        std::vector<MonotoneMap> labels;
        if (pos_ < s_.size() && peek() == '(') {
            get();
            expect('a');
            expect('=');
            for (;;) {
                labels.push_back(parse_label());
                if (peek() == ',') {
                    get();
                    continue;
                }
                break;
            }
            expect(')');
        }
        return VarId(fam, j, a, std::move(labels));
    }

    MonotoneMap parse_label() {
        expect('(');
        std::vector<int> vals;
        for (;;) {
            vals.push_back(static_cast<int>(parse_int()));
            char c = get();
            if (c == ',') continue;
            if (c == ')') break;
            throw std::invalid_argument("polynomial parse: bad label tuple");
        }
        int n = 0;
        for (int v : vals) n = std::max(n, v);
        if (pos_ + 1 < s_.size() && peek() == '-' && s_[pos_ + 1] == '>') {
            pos_ += 2;
            n = static_cast<int>(parse_int());
        }
        return MonotoneMap(std::move(vals), n);
    }

    int parse_opt_exponent() {
        if (pos_ < s_.size() && peek() == '^') {
            get();
            return static_cast<int>(parse_int());
        }
        return 1;
    }

    Int parse_int() {
        skip_ws();
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        if (digits.empty()) throw std::invalid_argument("polynomial parse: expected integer");
        return Int(digits);
    }

    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw std::invalid_argument(std::string("polynomial parse: expected '") + c + "'");
        ++pos_;
    }
    void expect_word(const std::string& w) {
        if (s_.compare(pos_, w.size(), w) != 0)
            throw std::invalid_argument("polynomial parse: expected '" + w + "'");
        pos_ += w.size();
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() {
        if (pos_ >= s_.size()) throw std::invalid_argument("polynomial parse: unexpected end");
        return s_[pos_++];
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& s) { return detail::PolyParser(s).parse(); }

}  // namespace simpforge
