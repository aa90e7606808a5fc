#pragma once

#include "pwq/pipoly.hpp"
#include "pwq/symbols.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace pwq {

/// Product of symbol powers, kept sorted by symbol id. The empty monomial
/// is the constant 1.
class Monomial {
public:
    using Factor = std::pair<sym::Id, std::uint16_t>;

    Monomial() = default;
    explicit Monomial(sym::Id s, std::uint16_t e = 1) {
        if (e > 0) f_.push_back({s, e});
    }

    static Monomial one() { return {}; }

    bool is_one() const { return f_.empty(); }
    int total_degree() const {
        int d = 0;
        for (auto& [s, e] : f_) d += e;
        return d;
    }
    int degree_in(sym::Id s) const {
        for (auto& [id, e] : f_)
            if (id == s) return e;
        return 0;
    }
    bool contains(sym::Id s) const { return degree_in(s) > 0; }

    const auto& factors() const { return f_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        auto ia = a.f_.begin(), ib = b.f_.begin();
        while (ia != a.f_.end() && ib != b.f_.end()) {
            if (ia->first < ib->first) r.f_.push_back(*ia++);
            else if (ib->first < ia->first) r.f_.push_back(*ib++);
            else {
                r.f_.push_back({ia->first, static_cast<std::uint16_t>(ia->second + ib->second)});
                ++ia; ++ib;
            }
        }
        r.f_.insert(r.f_.end(), ia, a.f_.end());
        r.f_.insert(r.f_.end(), ib, b.f_.end());
        return r;
    }

    /// Graded lex: total degree first, then lexicographic in (id, exp) runs.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        const int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return std::lexicographical_compare(a.f_.begin(), a.f_.end(), b.f_.begin(), b.f_.end());
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::string str() const {
        if (is_one()) return "1";
        std::string s;
        for (auto& [id, e] : f_) {
            if (!s.empty()) s += "*";
            s += std::string(sym::name(id));
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    boost::container::small_vector<Factor, 3> f_;
};

/// Sparse multivariate polynomial in the registry symbols, with exact
/// coefficients in C (PiPoly during expansion, PiFrac in the ladder).
/// Terms are kept sorted; zero coefficients are never stored.
template <class C>
class SparsePoly {
public:
    using Term = std::pair<Monomial, C>;

    SparsePoly() = default;
    SparsePoly(C c) {
        if (!c.is_zero()) t_.push_back({Monomial::one(), std::move(c)});
    }
    SparsePoly(BigRational c) : SparsePoly(C(std::move(c))) {}
    SparsePoly(long n) : SparsePoly(C(BigRational(n))) {}

    static SparsePoly variable(sym::Id s) { return term(Monomial(s), C(BigRational(1))); }
    static SparsePoly term(Monomial m, C c) {
        SparsePoly p;
        if (!c.is_zero()) p.t_.push_back({std::move(m), std::move(c)});
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.front().first.is_one());
    }
    const C& constant_part() const {
        static const C zero{};
        if (!t_.empty() && t_.front().first.is_one()) return t_.front().second;
        return zero;
    }

    int total_degree() const {
        int d = -1;
        for (auto& [m, c] : t_) d = std::max(d, m.total_degree());
        return d;
    }
    /// True when every monomial has total degree exactly d (vacuous for 0).
    bool is_homogeneous(int d) const {
        for (auto& [m, c] : t_)
            if (m.total_degree() != d) return false;
        return true;
    }

    C coeff(const Monomial& m) const {
        auto it = std::lower_bound(t_.begin(), t_.end(), m,
                                   [](const Term& t, const Monomial& k) { return t.first < k; });
        if (it != t_.end() && it->first == m) return it->second;
        return C{};
    }

    SparsePoly& operator+=(const SparsePoly& o) { merge(o, false); return *this; }
    SparsePoly& operator-=(const SparsePoly& o) { merge(o, true); return *this; }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { a += b; return a; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { a -= b; return a; }
    friend SparsePoly operator-(const SparsePoly& a) {
        SparsePoly r = a;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        if (a.is_zero() || b.is_zero()) return r;
        if (b.t_.size() == 1) return mul_term(a, b.t_.front());
        if (a.t_.size() == 1) return mul_term(b, a.t_.front());
        std::vector<Term> acc;
        acc.reserve(a.t_.size() * b.t_.size());
        for (auto& ta : a.t_)
            for (auto& tb : b.t_)
                acc.push_back({ta.first * tb.first, ta.second * tb.second});
        std::sort(acc.begin(), acc.end(),
                  [](const Term& x, const Term& y) { return x.first < y.first; });
        for (auto& t : acc) {
            if (!r.t_.empty() && r.t_.back().first == t.first) r.t_.back().second += t.second;
            else r.t_.push_back(std::move(t));
        }
        r.prune();
        return r;
    }
    SparsePoly& operator*=(const SparsePoly& o) { *this = *this * o; return *this; }

    SparsePoly& operator*=(const C& s) {
        if (s.is_zero()) { t_.clear(); return *this; }
        for (auto& [m, c] : t_) c *= s;
        prune();
        return *this;
    }
    friend SparsePoly operator*(SparsePoly a, const C& s) { a *= s; return a; }
    SparsePoly& operator*=(const BigRational& s) { return (*this *= C(s)); }
    friend SparsePoly operator*(SparsePoly a, const BigRational& s) { a *= C(s); return a; }
    friend SparsePoly operator*(const BigRational& s, SparsePoly a) { a *= C(s); return a; }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    /// Substitutes a polynomial for one symbol. Exact; exponentiation by
    /// repeated multiplication.
    SparsePoly substituted(sym::Id s, const SparsePoly& value) const {
        SparsePoly out;
        for (auto& [m, c] : t_) {
            int e = m.degree_in(s);
            if (e == 0) { out += term(m, c); continue; }
            Monomial rest;
            for (auto& f : m.factors())
                if (f.first != s) rest = rest * Monomial(f.first, f.second);
            SparsePoly piece = term(std::move(rest), c);
            for (int i = 0; i < e; ++i) piece *= value;
            out += piece;
        }
        return out;
    }

    /// Simultaneous substitution map (applied once, not iterated).
    SparsePoly substituted(const std::map<sym::Id, SparsePoly>& values) const {
        SparsePoly out;
        for (auto& [m, c] : t_) {
            SparsePoly piece = term(Monomial::one(), c);
            Monomial untouched;
            for (auto& [id, e] : m.factors()) {
                auto it = values.find(id);
                if (it == values.end()) { untouched = untouched * Monomial(id, e); continue; }
                for (int i = 0; i < e; ++i) piece *= it->second;
            }
            out += mul_term(piece, {untouched, C(BigRational(1))});
        }
        return out;
    }

    SparsePoly derivative(sym::Id s) const {
        SparsePoly out;
        for (auto& [m, c] : t_) {
            int e = m.degree_in(s);
            if (e == 0) continue;
            Monomial rest;
            for (auto& f : m.factors()) {
                if (f.first == s) {
                    if (f.second > 1) rest = rest * Monomial(s, static_cast<std::uint16_t>(f.second - 1));
                } else rest = rest * Monomial(f.first, f.second);
            }
            out += term(std::move(rest), c * C(BigRational(e)));
        }
        return out;
    }

    bool depends_on(sym::Id s) const {
        for (auto& [m, c] : t_)
            if (m.contains(s)) return true;
        return false;
    }

    /// Coefficient of sym^1 when the polynomial is linear in sym; more
    /// precisely, sum of terms containing sym exactly once, with sym removed.
    SparsePoly linear_coeff(sym::Id s) const {
        SparsePoly out;
        for (auto& [m, c] : t_) {
            if (m.degree_in(s) != 1) continue;
            Monomial rest;
            for (auto& f : m.factors())
                if (f.first != s) rest = rest * Monomial(f.first, f.second);
            out += term(std::move(rest), c);
        }
        return out;
    }

    /// Relabels symbols (used by the +/- swap symmetry test).
    SparsePoly relabeled(const std::function<sym::Id(sym::Id)>& map) const {
        SparsePoly out;
        for (auto& [m, c] : t_) {
            Monomial nm;
            for (auto& [id, e] : m.factors()) nm = nm * Monomial(map(id), e);
            out += term(std::move(nm), c);
        }
        return out;
    }

    /// Numeric evaluation; `assign` must cover every symbol that occurs.
    template <class T>
    T eval(const std::map<sym::Id, T>& assign, const T& pi_value) const {
        T acc{0};
        for (auto& [m, c] : t_) {
            T t = c.eval(pi_value);
            for (auto& [id, e] : m.factors()) {
                auto it = assign.find(id);
                if (it == assign.end())
                    throw std::invalid_argument("SparsePoly::eval: unassigned symbol " +
                                                std::string(sym::name(id)));
                for (int i = 0; i < e; ++i) t *= it->second;
            }
            acc += t;
        }
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (auto& [m, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            if (!m.is_one()) s += "*" + m.str();
        }
        return s;
    }

private:
    static SparsePoly mul_term(const SparsePoly& a, const Term& t) {
        SparsePoly r;
        r.t_.reserve(a.t_.size());
        for (auto& ta : a.t_) {
            C c = ta.second * t.second;
            if (!c.is_zero()) r.t_.push_back({ta.first * t.first, std::move(c)});
        }
        // multiplying by one monomial preserves strict ordering
        return r;
    }

    void merge(const SparsePoly& o, bool negate) {
        std::vector<Term> out;
        out.reserve(t_.size() + o.t_.size());
        auto ia = t_.begin();
        auto ib = o.t_.begin();
        while (ia != t_.end() && ib != o.t_.end()) {
            if (ia->first < ib->first) out.push_back(std::move(*ia++));
            else if (ib->first < ia->first) {
                out.push_back({ib->first, negate ? -ib->second : ib->second});
                ++ib;
            } else {
                C c = negate ? ia->second - ib->second : ia->second + ib->second;
                if (!c.is_zero()) out.push_back({std::move(ia->first), std::move(c)});
                ++ia; ++ib;
            }
        }
        for (; ia != t_.end(); ++ia) out.push_back(std::move(*ia));
        for (; ib != o.t_.end(); ++ib)
            out.push_back({ib->first, negate ? -ib->second : ib->second});
        t_ = std::move(out);
    }

    void prune() {
        t_.erase(std::remove_if(t_.begin(), t_.end(),
                                [](const Term& t) { return t.second.is_zero(); }),
                 t_.end());
    }

    std::vector<Term> t_;
};

using ParamPoly = SparsePoly<PiPoly>;
using FracPoly = SparsePoly<PiFrac>;

/// Lifts PiPoly coefficients into the fraction field.
inline FracPoly to_frac(const ParamPoly& p) {
    FracPoly out;
    for (auto& [m, c] : p.terms()) out += FracPoly::term(m, PiFrac(c));
    return out;
}

/// Lowers back when every denominator is trivial; throws otherwise.
inline ParamPoly to_poly(const FracPoly& p) {
    ParamPoly out;
    for (auto& [m, c] : p.terms()) {
        if (!c.is_polynomial())
            throw std::domain_error("to_poly: nontrivial pi denominator in " + c.str());
        PiPoly n = c.num();
        n *= BigRational(1) / c.den().coeff(0);
        out += ParamPoly::term(m, std::move(n));
    }
    return out;
}

} // namespace pwq
