#pragma once

/// Sparse multivariate Laurent polynomials with exact rational coefficients.
///
/// Variables are identified by (kind, index) pairs drawn from the fixed
/// alphabets used throughout the library: two families of evaluation points
/// (mu/nu), the series variable beta, weight parameters c_i, and formal
/// generating coefficients g_i.  Exponents may be negative, which is what
/// makes determinantal expressions in inverse powers of the evaluation
/// points directly representable.
///
/// The term map is ordered by lexicographic comparison on exponent vectors
/// (variables in canonical order, absent variables read as exponent 0); the
/// last map entry is therefore the lex-leading term, which is what the exact
/// division routine walks.

#include <atomic>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// ---------------------------------------------------------------------------
// Variables

enum class VarKind : std::uint8_t { MU = 0, NU = 1, BETA = 2, C = 3, G = 4 };

struct VarId {
    VarKind kind;
    int index;

    friend bool operator==(const VarId& a, const VarId& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator!=(const VarId& a, const VarId& b) { return !(a == b); }
    friend bool operator<(const VarId& a, const VarId& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.index < b.index;
    }
};

inline VarId var_mu(int i) { return {VarKind::MU, i}; }
inline VarId var_nu(int i) { return {VarKind::NU, i}; }
inline VarId var_beta() { return {VarKind::BETA, 0}; }
inline VarId var_c(int i) { return {VarKind::C, i}; }
inline VarId var_g(int i) { return {VarKind::G, i}; }

inline std::string to_string(const VarId& v) {
    switch (v.kind) {
        case VarKind::MU: return "mu" + std::to_string(v.index);
        case VarKind::NU: return "nu" + std::to_string(v.index);
        case VarKind::BETA: return "beta";
        case VarKind::C: return "c" + std::to_string(v.index);
        case VarKind::G: return "g" + std::to_string(v.index);
    }
    return "?";
}

/// Inverse of to_string(VarId); recognizes "beta", "mu<k>", "nu<k>", "c<k>",
/// "g<k>".  Throws Error on anything else.
inline VarId parse_var(const std::string& name) {
    auto tail_index = [&](std::size_t off) {
        if (name.size() <= off) throw Error("parse_var: missing index in '" + name + "'");
        for (std::size_t i = off; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw Error("parse_var: bad index in '" + name + "'");
        return std::stoi(name.substr(off));
    };
    if (name == "beta") return var_beta();
    if (name.rfind("mu", 0) == 0) return var_mu(tail_index(2));
    if (name.rfind("nu", 0) == 0) return var_nu(tail_index(2));
    if (name.rfind("c", 0) == 0) return var_c(tail_index(1));
    if (name.rfind("g", 0) == 0) return var_g(tail_index(1));
    throw Error("parse_var: unknown variable '" + name + "'");
}

// ---------------------------------------------------------------------------
// Monomials

/// A Laurent monomial: sorted (VarId, exponent) pairs, exponents nonzero.
class Monomial {
  public:
    Monomial() = default;

    /// Build from possibly unsorted factors; merges duplicates, drops zeros.
    explicit Monomial(std::vector<std::pair<VarId, int>> factors) {
        std::sort(factors.begin(), factors.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [v, e] : factors) {
            if (e == 0) continue;
            if (!factors_.empty() && factors_.back().first == v)
                factors_.back().second += e;
            else
                factors_.emplace_back(v, e);
        }
        std::erase_if(factors_, [](const auto& f) { return f.second == 0; });
    }

    static Monomial one() { return Monomial(); }
    static Monomial var(VarId v, int e = 1) { return Monomial({{v, e}}); }

    bool is_one() const { return factors_.empty(); }
    const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }

    int exponent_of(VarId v) const {
        for (const auto& [w, e] : factors_)
            if (w == v) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        auto a = factors_.begin(), ae = factors_.end();
        auto b = o.factors_.begin(), be = o.factors_.end();
        while (a != ae || b != be) {
            if (b == be || (a != ae && a->first < b->first)) {
                r.factors_.push_back(*a++);
            } else if (a == ae || b->first < a->first) {
                r.factors_.push_back(*b++);
            } else {
                int e = a->second + b->second;
                if (e != 0) r.factors_.emplace_back(a->first, e);
                ++a;
                ++b;
            }
        }
        return r;
    }

    /// Monomial quotient this / o (exponent subtraction; always defined for
    /// Laurent monomials).
    Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }

    Monomial inverse() const {
        Monomial r;
        r.factors_ = factors_;
        for (auto& [v, e] : r.factors_) e = -e;
        return r;
    }

    Monomial pow(int k) const {
        Monomial r;
        r.factors_ = factors_;
        for (auto& [v, e] : r.factors_) e *= k;
        if (k == 0) r.factors_.clear();
        return r;
    }

    /// True when every exponent of o is "inside" this monomial's exponents in
    /// the ordinary-polynomial sense (0 <= e_o <= e_this coordinate-wise,
    /// assuming both monomials have nonnegative exponents).  Used by exact
    /// division after shifting to nonnegative exponents.
    bool divisible_by(const Monomial& o) const {
        for (const auto& [v, e] : o.factors_) {
            int mine = exponent_of(v);
            if (e > 0 ? mine < e : mine > e) return false;
        }
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    /// Lexicographic order on exponent vectors: compare exponents variable by
    /// variable in canonical VarId order, absent variables counting as 0.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        auto i = a.factors_.begin(), ie = a.factors_.end();
        auto j = b.factors_.begin(), je = b.factors_.end();
        while (i != ie || j != je) {
            if (j == je || (i != ie && i->first < j->first)) {
                // variable present only in a; its exponent faces 0 in b
                if (i->second != 0) return i->second < 0;
                ++i;
            } else if (i == ie || j->first < i->first) {
                if (j->second != 0) return j->second > 0;
                ++j;
            } else {
                if (i->second != j->second) return i->second < j->second;
                ++i;
                ++j;
            }
        }
        return false;
    }

    std::string str() const {
        if (factors_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) out += "*";
            out += to_string(factors_[i].first);
            if (factors_[i].second != 1)
                out += "^" + std::to_string(factors_[i].second);
        }
        return out;
    }

  private:
    std::vector<std::pair<VarId, int>> factors_;
};

// ---------------------------------------------------------------------------
// Polynomials

namespace detail {
/// Process-wide budget for polynomial term counts; exceeded => TooLarge.
inline std::atomic<std::size_t>& max_terms_slot() {
    static std::atomic<std::size_t> v{5'000'000};
    return v;
}
}  // namespace detail

inline void set_max_terms(std::size_t n) { detail::max_terms_slot().store(n); }
inline std::size_t max_terms() { return detail::max_terms_slot().load(); }

class LaurentPoly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    LaurentPoly() = default;
    /*implicit*/ LaurentPoly(const Rational& c) {
        if (c != 0) terms_[Monomial::one()] = c;
    }
    /*implicit*/ LaurentPoly(int c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly variable(VarId v, int e = 1) {
        return monomial(Monomial::var(v, e), 1);
    }
    static LaurentPoly monomial(const Monomial& m, const Rational& c) {
        LaurentPoly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw Error("constant_value: polynomial is not constant");
        return terms_.begin()->second;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        check_budget();
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        // multiply the smaller term set on the outside
        const LaurentPoly& s = a.term_count() <= b.term_count() ? a : b;
        const LaurentPoly& t = a.term_count() <= b.term_count() ? b : a;
        for (const auto& [ms, cs] : s.terms_)
            for (const auto& [mt, ct] : t.terms_) r.add_term(ms * mt, cs * ct);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [m, cc] : terms_) cc *= c;
        }
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

    LaurentPoly& operator/=(const Rational& c) {
        if (c == 0) throw Error("LaurentPoly: division by zero scalar");
        for (auto& [m, cc] : terms_) cc /= c;
        return *this;
    }
    friend LaurentPoly operator/(LaurentPoly a, const Rational& c) { return a /= c; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    LaurentPoly pow(int k) const {
        if (k < 0) {
            if (terms_.size() != 1)
                throw Error("LaurentPoly::pow: negative power of a non-monomial");
            const auto& [m, c] = *terms_.begin();
            return monomial(m.pow(k), pow_rational(c, k));
        }
        LaurentPoly acc(Rational(1));
        LaurentPoly base = *this;
        int e = k;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// All variables appearing with nonzero exponent.
    std::vector<VarId> variables() const {
        std::vector<VarId> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors()) out.push_back(v);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// Minimal exponent of v over all terms (0 for absent polynomials).
    int min_degree(VarId v) const {
        bool first = true;
        int best = 0;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent_of(v);
            if (first || e < best) best = e;
            first = false;
        }
        return best;
    }
    int max_degree(VarId v) const {
        bool first = true;
        int best = 0;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent_of(v);
            if (first || e > best) best = e;
            first = false;
        }
        return best;
    }

    /// Coefficient of v^degree: the terms with that exact exponent of v,
    /// with v stripped out.
    LaurentPoly coefficient_of(VarId v, int degree) const {
        LaurentPoly out;
        for (const auto& [m, c] : terms_) {
            if (m.exponent_of(v) != degree) continue;
            out.add_term(m / Monomial::var(v, degree), c);
        }
        return out;
    }

    /// Substitute an exact rational value for variable v (negative exponents
    /// permitted for nonzero values).
    LaurentPoly substituted(VarId v, const Rational& value) const {
        LaurentPoly out;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent_of(v);
            if (e != 0 && value == 0 && e < 0)
                throw Error("substituted: zero value at negative exponent");
            Rational factor = e == 0 ? Rational(1) : pow_rational(value, e);
            out.add_term(m / Monomial::var(v, e), c * factor);
        }
        return out;
    }

    /// Substitute a polynomial for variable v.  Negative exponents of v are
    /// only supported when the replacement is a single (invertible) term.
    LaurentPoly substituted(VarId v, const LaurentPoly& value) const {
        LaurentPoly out;
        std::map<int, LaurentPoly> powers;  // e -> value^e
        for (const auto& [m, c] : terms_) {
            int e = m.exponent_of(v);
            LaurentPoly rest = monomial(m / Monomial::var(v, e), c);
            if (e == 0) {
                out += rest;
                continue;
            }
            auto it = powers.find(e);
            if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
            out += rest * it->second;
        }
        return out;
    }

    /// Full evaluation: every variable of the polynomial must be assigned.
    Rational evaluated(const std::map<VarId, Rational>& assignment) const {
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : m.factors()) {
                auto it = assignment.find(v);
                if (it == assignment.end())
                    throw Error("evaluated: unassigned variable " + to_string(v));
                t *= pow_rational(it->second, e);
            }
            total += t;
        }
        return total;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        // print highest lex term first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (m.is_one()) {
                out << a.get_str();
            } else {
                if (a != 1) out << a.get_str() << "*";
                out << m.str();
            }
            first = false;
        }
        return out.str();
    }

  private:
    void check_budget() const {
        if (terms_.size() > max_terms())
            throw TooLarge("LaurentPoly: term budget exceeded (" +
                           std::to_string(terms_.size()) + " > " +
                           std::to_string(max_terms()) + ")");
    }

    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Exact division

/// Exact quotient f / g; throws NotDivisible when g does not divide f and
/// Error when g = 0.  Works for Laurent inputs by first shifting both
/// operands into ordinary polynomials (nonnegative exponents), then running
/// lex-ordered single-divisor division, which must consume the dividend
/// exactly.
inline LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw Error("exact_div: division by zero polynomial");
    if (f.is_zero()) return LaurentPoly();

    // Normalise each operand by its full monomial content: after multiplying
    // by the shift, every variable has minimum exponent exactly 0.  Clearing
    // positive minima matters too — a common monomial factor of g would
    // otherwise force negative exponents into the quotient and break the
    // ordinary-polynomial division below.  (Minimum exponents are additive
    // under multiplication here, so content cancels exactly in the quotient.)
    auto shift_of = [](const LaurentPoly& p) {
        std::vector<std::pair<VarId, int>> sh;
        for (VarId v : p.variables()) {
            int m = p.min_degree(v);
            if (m != 0) sh.emplace_back(v, -m);
        }
        return Monomial(std::move(sh));
    };
    Monomial sf = shift_of(f), sg = shift_of(g);
    LaurentPoly F = f * LaurentPoly::monomial(sf, 1);
    LaurentPoly G = g * LaurentPoly::monomial(sg, 1);

    // Leading term of G under the lex order (last entry of the term map).
    const auto& gt = *G.terms().rbegin();

    LaurentPoly q;
    LaurentPoly r = F;
    while (!r.is_zero()) {
        const auto& rt = *r.terms().rbegin();
        if (!rt.first.divisible_by(gt.first))
            throw NotDivisible("exact_div: remainder " + r.str());
        Monomial m = rt.first / gt.first;
        Rational c = rt.second / gt.second;
        LaurentPoly piece = LaurentPoly::monomial(m, c);
        q += piece;
        r -= piece * G;
    }
    // undo shifts: f/g = (F / sf) / (G / sg) = q * sg / sf
    return q * LaurentPoly::monomial(sg / sf, 1);
}

}  // namespace hurwitz
