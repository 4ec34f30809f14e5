#pragma once

/// Determinant representation of the two-alphabet generating series and
/// everything derived from it.
///
/// The central object is the N x N matrix with entries
///
///   M_ij = sum_l  nu_j^{-l-1} mu_i^{-l-1} rho_l ,        l >= -N,
///
/// whose determinant, normalized by r0(-N) and divided by the two
/// Vandermondes, expands as  sum_d b^d sum_{omega,sigma} H^d(omega,sigma)
/// p_omega(1/nu) p_sigma(1/mu).  This header builds that expansion exactly:
///
///  * expand_determinant: the finite-range reorganization of det(sum) into
///    sum over strictly decreasing index tuples of rho-products times a pair
///    of alternant determinants (verified literally by verify_det_expansion);
///  * each alternant over Vandermonde is a shifted Schur polynomial
///    (bialternant), so the division by Delta(nu) Delta(mu) never happens
///    symbolically on the primary path — but a literal determinant +
///    exact-division route cross-checks it;
///  * solve_tau_system inverts the monomial-class system at inverse-degree
///    level n and recovers the H^d tables, keeping the rho_l as *formal*
///    variables (RhoPoly) so the same solution serves every weight function
///    and supports the index-filtered partial sums of the recursion;
///  * verify_recursion checks the k-point recursion identity at exact
///    rational Miwa points, with the partial-sum terms computed both from
///    filtered formal-rho tables and from aggregated truncated determinants.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hurwitz/characters.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/laurent.hpp"
#include "hurwitz/matrix.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/weights.hpp"

namespace hurwitz {

// ---------------------------------------------------------------------------
// Context

/// Dimension, truncation, and (optionally) numeric evaluation points for the
/// two Miwa alphabets.  Empty point lists mean symbolic variables
/// mu_1..mu_N / nu_1..nu_N.
struct MiwaContext {
    int N = 1;       // alphabet dimension
    int n_max = 1;   // highest total inverse-degree level retained
    int D = 0;       // beta truncation order
    std::vector<Rational> mu_points;  // empty => symbolic
    std::vector<Rational> nu_points;

    MiwaContext(int N_, int n_max_, int D_) : N(N_), n_max(n_max_), D(D_) { validate(); }
    MiwaContext(int N_, int n_max_, int D_, std::vector<Rational> mu_pts,
                std::vector<Rational> nu_pts)
        : N(N_), n_max(n_max_), D(D_), mu_points(std::move(mu_pts)),
          nu_points(std::move(nu_pts)) {
        validate();
    }

    bool numeric() const { return !mu_points.empty(); }

    std::vector<VarId> mu_vars() const {
        std::vector<VarId> v;
        for (int i = 1; i <= N; ++i) v.push_back(var_mu(i));
        return v;
    }
    std::vector<VarId> nu_vars() const {
        std::vector<VarId> v;
        for (int i = 1; i <= N; ++i) v.push_back(var_nu(i));
        return v;
    }

  private:
    void validate() const {
        if (N < 1) throw Error("MiwaContext: N must be >= 1");
        if (n_max < 0 || D < 0) throw Error("MiwaContext: negative truncation");
        if (mu_points.empty() != nu_points.empty())
            throw Error("MiwaContext: give both point lists or neither");
        for (const auto* pts : {&mu_points, &nu_points}) {
            if (pts->empty()) continue;
            if (static_cast<int>(pts->size()) != N)
                throw Error("MiwaContext: point list length != N");
            for (std::size_t i = 0; i < pts->size(); ++i) {
                if ((*pts)[i] == 0) throw Error("MiwaContext: zero evaluation point");
                for (std::size_t j = i + 1; j < pts->size(); ++j)
                    if ((*pts)[i] == (*pts)[j])
                        throw RepeatedPoint("MiwaContext: repeated point " +
                                            (*pts)[i].get_str());
            }
        }
    }
};

// ---------------------------------------------------------------------------
// Formal rho polynomials

/// Exact polynomial in formal variables rho_l, l any integer.  A monomial is
/// a product rho_{l_1}...rho_{l_N} recorded as the strictly decreasing index
/// tuple (l_1 > ... > l_N); the empty tuple is the constant monomial.
/// Squares of a single rho never arise in this library (index tuples come
/// from determinant columns, which are distinct), so the strictly-decreasing
/// invariant is enforced rather than generalized away.
class RhoPoly {
  public:
    using TermMap = std::map<std::vector<int>, Rational>;

    RhoPoly() = default;
    static RhoPoly constant(const Rational& c) {
        RhoPoly r;
        r.add_term({}, c);
        return r;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::vector<int> indices, const Rational& c) {
        if (c == 0) return;
        for (std::size_t i = 1; i < indices.size(); ++i)
            if (indices[i - 1] <= indices[i])
                throw Error("RhoPoly: index tuple not strictly decreasing");
        auto [it, inserted] = terms_.try_emplace(std::move(indices), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    RhoPoly& operator+=(const RhoPoly& o) {
        for (const auto& [t, c] : o.terms_) add_term(t, c);
        return *this;
    }
    friend RhoPoly operator+(RhoPoly a, const RhoPoly& b) { return a += b; }

    RhoPoly operator*(const Rational& c) const {
        RhoPoly r;
        if (c == 0) return r;
        for (const auto& [t, v] : terms_) r.terms_[t] = v * c;
        return r;
    }

    friend bool operator==(const RhoPoly& a, const RhoPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const RhoPoly& a, const RhoPoly& b) { return !(a == b); }

    /// Keep only monomials whose every index is >= lmin (the partial sums
    /// "indices from lmin upward" of the recursion).
    RhoPoly filtered_min_index(int lmin) const {
        RhoPoly r;
        for (const auto& [t, c] : terms_) {
            bool keep = true;
            for (int l : t)
                if (l < lmin) {
                    keep = false;
                    break;
                }
            if (keep) r.terms_[t] = c;
        }
        return r;
    }

    /// Multiply every monomial by rho_{e_1}...rho_{e_m} for extra indices
    /// that must sit strictly below all existing ones (used to re-express a
    /// level-n table at a larger alphabet dimension).
    RhoPoly with_appended(const std::vector<int>& extra) const {
        RhoPoly r;
        for (const auto& [t, c] : terms_) {
            std::vector<int> nt = t;
            nt.insert(nt.end(), extra.begin(), extra.end());
            r.add_term(std::move(nt), c);
        }
        return r;
    }

    /// Substitute the concrete series rho_l of a weight function.
    BetaSeries substituted(const WeightFunc& w, int D) const {
        BetaSeries acc(D);
        for (const auto& [t, c] : terms_) {
            BetaSeries prod = BetaSeries::one(D);
            for (int l : t) prod *= w.rho(l, D);
            acc += prod * c;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [t, c] : terms_) {
            if (!first) out += " + ";
            out += c.get_str();
            for (int l : t) out += "*rho[" + std::to_string(l) + "]";
            first = false;
        }
        return out;
    }

  private:
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Index tuples and bialternants

/// All strictly decreasing integer tuples (l_1 > ... > l_N >= lo) with the
/// given sum.
inline std::vector<std::vector<int>> descending_tuples(int N, int lo, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    // Position p chooses l < previous; the remaining r = N - p - 1 entries
    // are strictly below l and >= lo, so their sum lies between
    // lo + ... + (lo + r - 1) and (l - r) + ... + (l - 1).
    std::function<void(int, int, int)> rec = [&](int pos, int hi, int rem) {
        int r = N - pos - 1;
        if (pos == N) {
            if (rem == 0) out.push_back(acc);
            return;
        }
        for (int l = hi; l >= lo + r; --l) {
            int rest = rem - l;
            int minrest = 0, maxrest = 0;
            for (int i = 0; i < r; ++i) {
                minrest += lo + i;
                maxrest += l - 1 - i;
            }
            if (rest < minrest || rest > maxrest) continue;
            acc.push_back(l);
            rec(pos + 1, l - 1, rest);
            acc.pop_back();
        }
    };
    if (N == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    // upper bound for l_1: sum minus the minimum the others can contribute
    int minothers = 0;
    for (int i = 0; i < N - 1; ++i) minothers += lo + i;
    rec(0, total - minothers, total);
    return out;
}

/// For an index tuple, the shifted-Schur data of the alternant ratio
/// det(x_a^{-l_b-1}) / det(x_a^{N-1-b}) up to column reordering: exponents
/// q = sorted(-l-1) descending give lambda_b = q_b - q_min - (N-1-b) and a
/// global factor (prod x)^{q_min}.  The reordering sign is dropped here; it
/// cancels between the two alphabets, which always use the same tuple.
struct BialternantShape {
    Partition lambda;  // zero parts stripped
    int shift;         // q_min: power of (prod x)
};

inline BialternantShape bialternant_shape(const std::vector<int>& ltuple) {
    const int N = static_cast<int>(ltuple.size());
    std::vector<int> q;
    for (int l : ltuple) q.push_back(-l - 1);
    std::sort(q.begin(), q.end(), std::greater<int>());
    int m = q.back();
    Partition lam;
    for (int b = 0; b < N; ++b) {
        int part = q[static_cast<std::size_t>(b)] - m - (N - 1 - b);
        if (part < 0) throw Error("bialternant_shape: tuple not strictly decreasing");
        if (part > 0) lam.push_back(part);
    }
    return {lam, m};
}

/// Exact value of (prod x)^shift * s_lambda(x) at rational points.
inline Rational bialternant_value(const std::vector<int>& ltuple,
                                  const std::vector<Rational>& x) {
    if (x.empty()) return Rational(ltuple.empty() ? 1 : 0);
    if (ltuple.size() != x.size())
        throw Error("bialternant_value: tuple/point length mismatch");
    BialternantShape sh = bialternant_shape(ltuple);
    Rational base(1);
    for (const Rational& xi : x) base *= pow_rational(xi, sh.shift);
    return base * schur_at_bialternant(sh.lambda, x);
}

// ---------------------------------------------------------------------------
// Truncated tau tables

/// The truncated two-alphabet expansion: value(omega, sigma, d) is the
/// coefficient of b^d p_omega(1/nu) p_sigma(1/mu); entries exist for
/// |omega| = |sigma| <= n_max and d <= D.  Values are polynomials in the
/// formal G_k when the weight function is symbolic.
class TauTruncation {
  public:
    TauTruncation(int n_max, int D) : n_max_(n_max), D_(D) {}

    int n_max() const { return n_max_; }
    int order() const { return D_; }

    void set(const Partition& omega, const Partition& sigma, BetaSeries s) {
        if (weight(omega) != weight(sigma))
            throw WeightMismatch("TauTruncation: |omega| != |sigma|");
        if (weight(omega) > n_max_) throw Error("TauTruncation: level beyond n_max");
        table_.insert_or_assign({omega, sigma}, std::move(s));
    }

    LaurentPoly value(const Partition& omega, const Partition& sigma, int d) const {
        auto it = table_.find({omega, sigma});
        if (it == table_.end()) return LaurentPoly();
        return it->second.coefficient(d);
    }

    const std::map<std::pair<Partition, Partition>, BetaSeries>& entries() const {
        return table_;
    }

    /// First (omega, sigma, d) where two truncations differ, if any.
    static std::optional<std::tuple<Partition, Partition, int>> first_difference(
        const TauTruncation& a, const TauTruncation& b) {
        int D = std::min(a.D_, b.D_);
        int n_max = std::min(a.n_max_, b.n_max_);
        std::set<std::pair<Partition, Partition>> keys;
        for (const auto& [k, v] : a.table_) keys.insert(k);
        for (const auto& [k, v] : b.table_) keys.insert(k);
        for (const auto& k : keys) {
            if (weight(k.first) > n_max) continue;
            for (int d = 0; d <= D; ++d)
                if (a.value(k.first, k.second, d) != b.value(k.first, k.second, d))
                    return std::make_tuple(k.first, k.second, d);
        }
        return std::nullopt;
    }

  private:
    int n_max_;
    int D_;
    std::map<std::pair<Partition, Partition>, BetaSeries> table_;
};

// ---------------------------------------------------------------------------
// The determinant side

/// The N x N entry matrix with the l-sum truncated to -N <= l <= L,
/// L = n_max - 1.  Terms with l > L only produce inverse-degrees beyond
/// n_max in every determinant contribution, so the truncation is exact for
/// the retained levels.  Entries are series over polynomials in the Miwa
/// variables (or numbers, for a numeric context).
inline Matrix<BetaSeries> det_matrix(const MiwaContext& ctx, const WeightFunc& w) {
    const int N = ctx.N;
    const int L = ctx.n_max - 1;
    Matrix<BetaSeries> m(static_cast<std::size_t>(N),
                         std::vector<BetaSeries>(static_cast<std::size_t>(N),
                                                 BetaSeries(ctx.D)));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            BetaSeries entry(ctx.D);
            for (int l = -N; l <= L; ++l) {
                LaurentPoly coeff;
                if (ctx.numeric()) {
                    coeff = LaurentPoly(
                        pow_rational(ctx.nu_points[static_cast<std::size_t>(j - 1)],
                                     -l - 1) *
                        pow_rational(ctx.mu_points[static_cast<std::size_t>(i - 1)],
                                     -l - 1));
                } else {
                    coeff = LaurentPoly::monomial(
                        Monomial({{var_nu(j), -l - 1}, {var_mu(i), -l - 1}}), 1);
                }
                entry += w.rho(l, ctx.D) * coeff;
            }
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = entry;
        }
    return m;
}

namespace detail {

/// Monomial-class tables of the expanded determinant at level n: for each
/// pair of exponent classes (kappa_nu, kappa_mu) — partitions of n padded
/// with zeros to length N — the coefficient as a polynomial in formal rho.
/// The table omits the overall r0(-N) normalization.
///
/// Per index tuple, the contribution to the class pair is (coefficient of
/// the class in the nu-side bialternant) x (same for mu-side); the dropped
/// reordering signs cancel in this product.
inline std::map<std::pair<std::vector<int>, std::vector<int>>, RhoPoly>
level_class_table(int N, int n, int lo) {
    const int total = n - N - N * (N - 1) / 2;
    std::vector<VarId> vars;
    for (int i = 1; i <= N; ++i) vars.push_back(var_mu(i));

    // classes: partitions of n with <= N parts, padded to length N
    std::vector<std::vector<int>> classes;
    for (const auto& p : partitions_of_max_length(n, N)) {
        std::vector<int> v(p.begin(), p.end());
        v.resize(static_cast<std::size_t>(N), 0);
        classes.push_back(std::move(v));
    }

    std::map<Partition, LaurentPoly> schur_cache;
    auto schur_of = [&](const Partition& lam) -> const LaurentPoly& {
        auto it = schur_cache.find(lam);
        if (it == schur_cache.end())
            it = schur_cache.emplace(lam, schur_poly(lam, vars)).first;
        return it->second;
    };

    std::map<std::pair<std::vector<int>, std::vector<int>>, RhoPoly> table;
    for (const auto& lt : descending_tuples(N, lo, total)) {
        BialternantShape sh = bialternant_shape(lt);
        const LaurentPoly& s = schur_of(sh.lambda);
        // class coefficient: [x^{-kappa}] (prod x)^shift s = [x^{-kappa-shift}] s
        std::vector<Rational> cls(classes.size());
        bool any = false;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            std::vector<std::pair<VarId, int>> mono;
            for (int i = 0; i < N; ++i)
                mono.emplace_back(vars[static_cast<std::size_t>(i)],
                                  -classes[c][static_cast<std::size_t>(i)] - sh.shift);
            cls[c] = s.coefficient(Monomial(std::move(mono)));
            if (cls[c] != 0) any = true;
        }
        if (!any) continue;
        for (std::size_t c1 = 0; c1 < classes.size(); ++c1) {
            if (cls[c1] == 0) continue;
            for (std::size_t c2 = 0; c2 < classes.size(); ++c2) {
                if (cls[c2] == 0) continue;
                table[{classes[c1], classes[c2]}].add_term(lt, cls[c1] * cls[c2]);
            }
        }
    }
    return table;
}

}  // namespace detail

/// Solve the level-n monomial-class system for the H tables, keeping rho_l
/// formal.  Result: map (omega, sigma) -> RhoPoly P with
///
///   H-series(omega, sigma) = r0(-N) * P(rho)
///
/// after substituting concrete rho_l.  Requires N >= n (the class system is
/// square and invertible exactly then); throws Underdetermined for N < n.
/// After solving, the solution is substituted back and re-checked against
/// the class table; a mismatch throws InconsistentSystem (which would mean
/// the determinant representation itself failed).
inline std::map<std::pair<Partition, Partition>, RhoPoly> solve_tau_system(int N, int n) {
    if (N < n)
        throw Underdetermined("solve_tau_system: N = " + std::to_string(N) +
                              " < n = " + std::to_string(n));
    if (n == 0) {
        // Level 0: the only entry is (empty, empty) with the forced tuple
        // (-1, -2, ..., -N), whose rho-product is exactly 1/r0(-N).
        std::map<std::pair<Partition, Partition>, RhoPoly> H;
        RhoPoly p;
        std::vector<int> forced;
        for (int j = 1; j <= N; ++j) forced.push_back(-j);
        p.add_term(forced, 1);
        H[{Partition{}, Partition{}}] = p;
        return H;
    }

    auto parts = partitions_of(n);
    const std::size_t P = parts.size();
    std::vector<std::vector<int>> classes;
    for (const auto& p : parts) {
        std::vector<int> v(p.begin(), p.end());
        v.resize(static_cast<std::size_t>(n > N ? n : N), 0);
        v.resize(static_cast<std::size_t>(N), 0);
        classes.push_back(std::move(v));
    }

    // M[kappa][omega] = coefficient of x^kappa in p_omega over N variables
    Matrix<Rational> M(P, std::vector<Rational>(P));
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = 0; j < P; ++j)
            M[i][j] = detail::p_monomial_coefficient(parts[j], classes[i]);
    Matrix<Rational> Minv = rational_inverse(M);

    auto table = detail::level_class_table(N, n, -N);
    auto cell = [&](std::size_t i, std::size_t j) -> const RhoPoly& {
        static const RhoPoly zero;
        auto it = table.find({classes[i], classes[j]});
        return it == table.end() ? zero : it->second;
    };

    std::map<std::pair<Partition, Partition>, RhoPoly> H;
    for (std::size_t a = 0; a < P; ++a)
        for (std::size_t b = 0; b < P; ++b) {
            RhoPoly acc;
            for (std::size_t i = 0; i < P; ++i) {
                if (Minv[a][i] == 0) continue;
                for (std::size_t j = 0; j < P; ++j) {
                    Rational c = Minv[a][i] * Minv[b][j];
                    if (c == 0) continue;
                    acc += cell(i, j) * c;
                }
            }
            H[{parts[a], parts[b]}] = acc;
        }

    // consistency tripwire: M H M^T must reproduce the class table exactly
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = 0; j < P; ++j) {
            RhoPoly back;
            for (std::size_t a = 0; a < P; ++a) {
                if (M[i][a] == 0) continue;
                for (std::size_t b = 0; b < P; ++b) {
                    Rational c = M[i][a] * M[j][b];
                    if (c == 0) continue;
                    back += H[{parts[a], parts[b]}] * c;
                }
            }
            if (back != cell(i, j))
                throw InconsistentSystem("solve_tau_system: re-substitution failed at "
                                         "class pair (" +
                                         format_partition(parts[i]) + ", " +
                                         format_partition(parts[j]) + ")");
        }
    return H;
}

/// The H tables for all levels n <= n_max with a concrete weight function:
/// entry (omega, sigma) is r0(-N) times the substituted formal solution.
inline TauTruncation tau_det_truncation(const MiwaContext& ctx, const WeightFunc& w) {
    TauTruncation out(ctx.n_max, ctx.D);
    for (int n = 0; n <= ctx.n_max; ++n) {
        auto H = solve_tau_system(ctx.N, n);
        BetaSeries r0 = w.r0_of(-ctx.N, ctx.D);
        for (const auto& [key, rp] : H)
            out.set(key.first, key.second, rp.substituted(w, ctx.D) * r0);
    }
    return out;
}

/// The independent expansion: entry (omega, sigma) = coefficient of
/// p_omega(t) p_sigma(s) in sum_lambda r_lambda(0) s_lambda(t) s_lambda(s),
/// which is the weighted character sum.  Oracle for tau_det_truncation.
inline TauTruncation tau_schur_truncation(const MiwaContext& ctx, const WeightFunc& w) {
    TauTruncation out(ctx.n_max, ctx.D);
    for (int n = 0; n <= ctx.n_max; ++n)
        for (const auto& om : partitions_of(n))
            for (const auto& sg : partitions_of(n))
                out.set(om, sg, weighted_hurwitz_series(w, om, sg, ctx.D));
    return out;
}

// ---------------------------------------------------------------------------
// Literal-division cross-check and the expansion lemma

namespace detail {

/// Select the terms of p whose total degree over each variable kind equals
/// the given value (Term_{-n} extraction over MU and NU together).
inline LaurentPoly select_total_degree(const LaurentPoly& p, int mu_total, int nu_total) {
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) {
        int dmu = 0, dnu = 0;
        for (const auto& [v, e] : m.factors()) {
            if (v.kind == VarKind::MU) dmu += e;
            if (v.kind == VarKind::NU) dnu += e;
        }
        if (dmu == mu_total && dnu == nu_total) out.add_term(m, c);
    }
    return out;
}

}  // namespace detail

/// Compute r0(-N) det(M) / (Delta(nu) Delta(mu)) by literal determinant
/// expansion and exact polynomial division, then extract the level-n slice
/// for each n <= n_max.  Slow but direct; used to cross-check the
/// bialternant reorganization.  Throws NotDivisible if a Vandermonde
/// division fails — which would falsify the representation.
inline std::vector<LaurentPoly> tau_det_literal_levels(const MiwaContext& ctx,
                                                       const WeightFunc& w) {
    if (ctx.numeric())
        throw Error("tau_det_literal_levels: symbolic context required");
    BetaSeries det = laplace_det(det_matrix(ctx, w)) * w.r0_of(-ctx.N, ctx.D);
    LaurentPoly delta =
        vandermonde_poly(ctx.nu_vars()) * vandermonde_poly(ctx.mu_vars());
    std::vector<LaurentPoly> levels;
    for (int n = 0; n <= ctx.n_max; ++n) {
        LaurentPoly level;
        for (int d = 0; d <= ctx.D; ++d) {
            LaurentPoly q = exact_div(det.coefficient(d), delta);
            level += detail::select_total_degree(q, -n, -n) *
                     LaurentPoly::variable(var_beta(), d);
        }
        levels.push_back(level);
    }
    return levels;
}

/// Reconstruct the level-n polynomial from a truncation:
/// sum_{|omega|=|sigma|=n, d} value * b^d p_omega(1/nu) p_sigma(1/mu).
inline LaurentPoly tau_level_from_truncation(const TauTruncation& t,
                                             const MiwaContext& ctx, int n) {
    LaurentPoly out;
    std::vector<LaurentPoly> inv_nu, inv_mu;
    for (int i = 1; i <= ctx.N; ++i) {
        inv_nu.push_back(LaurentPoly::variable(var_nu(i), -1));
        inv_mu.push_back(LaurentPoly::variable(var_mu(i), -1));
    }
    for (const auto& om : partitions_of(n)) {
        LaurentPoly pom = power_sum_product(om, inv_nu);
        for (const auto& sg : partitions_of(n)) {
            LaurentPoly psg = power_sum_product(sg, inv_mu);
            LaurentPoly coeff;
            for (int d = 0; d <= ctx.D; ++d)
                coeff += t.value(om, sg, d) * LaurentPoly::variable(var_beta(), d);
            out += coeff * pom * psg;
        }
    }
    return out;
}

/// Finite-range expansion lemma: for entries summed over -P <= l <= L, the
/// determinant equals the sum over strictly decreasing tuples from that
/// range of rho_{l_1}...rho_{l_N} det(nu_a^{-l_b-1}) det(mu_a^{-l_b-1}).
/// Pure term reorganization, so the check is exact equality of truncated
/// series over Laurent polynomials.  Verified for symbolic alphabets.
inline bool verify_det_expansion(int N, int P, const WeightFunc& w, int n_max, int D) {
    const int L = n_max - 1;
    // left: literal determinant of the range-limited entry matrix
    Matrix<BetaSeries> m(static_cast<std::size_t>(N),
                         std::vector<BetaSeries>(static_cast<std::size_t>(N),
                                                 BetaSeries(D)));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            BetaSeries entry(D);
            for (int l = -P; l <= L; ++l)
                entry += w.rho(l, D) *
                         LaurentPoly::monomial(
                             Monomial({{var_nu(j), -l - 1}, {var_mu(i), -l - 1}}), 1);
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = entry;
        }
    BetaSeries lhs = laplace_det(m);

    // right: ordered-tuple reorganization with literal alternant determinants
    BetaSeries rhs(D);
    std::vector<int> range;
    for (int l = L; l >= -P; --l) range.push_back(l);
    std::vector<int> tuple;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int depth) {
        if (depth == N) {
            BetaSeries prod = BetaSeries::one(D);
            for (int l : tuple) prod *= w.rho(l, D);
            auto alt = [&](auto var_of) {
                Matrix<LaurentPoly> a(static_cast<std::size_t>(N),
                                      std::vector<LaurentPoly>(static_cast<std::size_t>(N)));
                for (int i = 1; i <= N; ++i)
                    for (int b = 0; b < N; ++b)
                        a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(b)] =
                            LaurentPoly::variable(var_of(i),
                                                  -tuple[static_cast<std::size_t>(b)] - 1);
                return laplace_det(a);
            };
            rhs += prod * (alt([](int i) { return var_nu(i); }) *
                           alt([](int i) { return var_mu(i); }));
            return;
        }
        for (std::size_t i = start; i < range.size(); ++i) {
            tuple.push_back(range[i]);
            rec(i + 1, depth + 1);
            tuple.pop_back();
        }
    };
    rec(0, 0);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// The recursion identity

/// The nested Lagrange sum of the recursion's right side:
///
///   bar_p(points, m, l, sigma) =
///     sum over ordered m-tuples alpha of distinct indices of
///       prod_{j=1..m-1} [ x_{alpha_j}^{k+1-j} / prod_{i not in alpha_1..j}
///                                               (x_{alpha_j} - x_i) ]
///       * x_{alpha_m}^{-l-1} / prod_{i notin alpha} (x_{alpha_m} - x_i)
///       * p_sigma evaluated at 1/x over the points not in alpha,
///
/// with k + 1 = number of points.
inline Rational bar_p(const std::vector<Rational>& points, int m, int l,
                      const Partition& sigma) {
    const int P = static_cast<int>(points.size());
    const int k = P - 1;
    if (m < 1 || m > P) throw Error("bar_p: m out of range");
    for (int i = 0; i < P; ++i)
        for (int j = i + 1; j < P; ++j)
            if (points[static_cast<std::size_t>(i)] == points[static_cast<std::size_t>(j)])
                throw RepeatedPoint("bar_p: repeated point");

    Rational total(0);
    std::vector<int> alpha;
    std::vector<bool> used(static_cast<std::size_t>(P), false);
    std::function<void(Rational)> rec = [&](Rational acc) {
        int j = static_cast<int>(alpha.size());
        if (j == m) {
            std::vector<Rational> rest_inv;
            for (int i = 0; i < P; ++i)
                if (!used[static_cast<std::size_t>(i)])
                    rest_inv.push_back(Rational(1) / points[static_cast<std::size_t>(i)]);
            Rational p(1);
            for (int part : sigma) {
                Rational s(0);
                for (const Rational& x : rest_inv) s += pow_rational(x, part);
                p *= s;
            }
            total += acc * p;
            return;
        }
        for (int a = 0; a < P; ++a) {
            if (used[static_cast<std::size_t>(a)]) continue;
            int e = (j < m - 1) ? (k - j) : (-l - 1);
            Rational num = pow_rational(points[static_cast<std::size_t>(a)], e);
            used[static_cast<std::size_t>(a)] = true;
            alpha.push_back(a);
            Rational den(1);
            for (int i = 0; i < P; ++i)
                if (!used[static_cast<std::size_t>(i)])
                    den *= points[static_cast<std::size_t>(a)] -
                           points[static_cast<std::size_t>(i)];
            rec(acc * num / den);
            alpha.pop_back();
            used[static_cast<std::size_t>(a)] = false;
        }
    };
    rec(Rational(1));
    return total;
}

/// Outcome of a recursion check: both sides as exact series plus the first
/// differing beta-degree, if any.
struct RecursionReport {
    bool pass = false;
    BetaSeries lhs;
    BetaSeries rhs;
    int first_mismatch_d = -1;

    RecursionReport(BetaSeries l, BetaSeries r) : lhs(std::move(l)), rhs(std::move(r)) {
        pass = true;
        for (int d = 0; d <= lhs.order(); ++d)
            if (lhs.coefficient(d) != rhs.coefficient(d)) {
                pass = false;
                first_mismatch_d = d;
                break;
            }
    }
};

namespace detail {

/// Alternant ratio with exponents (k, k-1, ..., 1, -k-1) over k+1 points:
/// det(x_a^{e_b}) / Delta(x).
inline Rational leading_alternant(const std::vector<Rational>& pts) {
    const int P = static_cast<int>(pts.size());
    const int k = P - 1;
    std::vector<int> expo;
    for (int e = k; e >= 1; --e) expo.push_back(e);
    expo.push_back(-k - 1);
    Matrix<Rational> m(static_cast<std::size_t>(P), std::vector<Rational>(static_cast<std::size_t>(P)));
    for (int a = 0; a < P; ++a)
        for (int b = 0; b < P; ++b)
            m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                pow_rational(pts[static_cast<std::size_t>(a)],
                             expo[static_cast<std::size_t>(b)]);
    return laplace_det(m) / vandermonde_product(pts);
}

/// Index-filtered partial H value: take the formal level-n' solution at
/// alphabet dimension n', re-express at dimension Nj by appending the forced
/// rho_{-n'-1}..rho_{-Nj} factors, drop monomials containing any index
/// below lmin, substitute, and restore the r0(-Nj) normalization.
inline BetaSeries filtered_H_series(const RhoPoly& level_solution, int nprime, int Nj,
                                    int lmin, const WeightFunc& w, int D) {
    std::vector<int> extra;
    for (int j = nprime + 1; j <= Nj; ++j) extra.push_back(-j);
    RhoPoly shifted = level_solution.with_appended(extra);
    RhoPoly kept = shifted.filtered_min_index(lmin);
    return kept.substituted(w, D) * w.r0_of(-Nj, D);
}

}  // namespace detail

/// Verify the k-point recursion identity at exact rational Miwa points.
///
/// Left side: sum over |omega| = |sigma| = k+1 of the solved H-series times
/// p_omega(1/nu) p_sigma(1/mu).
///
/// Right side: the ladder-ratio leading term rho_k/rho_{-1} times the two
/// alternant ratios, plus for each group (alphabet dimension Nj = 1..k,
/// hat count m = k+1-Nj, lowest retained index l_s) the prefactor series
/// rho_{l_s}/rho_{-Nj-1} times the aggregated partial sums over hatted
/// point subsets.
///
/// The aggregated form evaluates, per ordered hat tuple, the truncated
/// determinant expansion directly at the remaining points (bialternant
/// values times rho products).  Wherever the filtered formal-rho tables
/// exist (n' <= Nj), the same group value is recomputed through bar_p and
/// the filtered tables and the two must agree exactly — that equivalence is
/// asserted here, not assumed.
inline RecursionReport verify_recursion(int k, const WeightFunc& w,
                                        const std::vector<Rational>& mu_points,
                                        const std::vector<Rational>& nu_points, int D) {
    if (k < 2) throw Error("verify_recursion: k must be >= 2");
    const int P = k + 1;
    if (static_cast<int>(mu_points.size()) != P ||
        static_cast<int>(nu_points.size()) != P)
        throw Error("verify_recursion: need k+1 points per alphabet");
    for (const auto* pts : {&mu_points, &nu_points}) {
        for (std::size_t i = 0; i < pts->size(); ++i) {
            if ((*pts)[i] == 0) throw Error("verify_recursion: zero point");
            for (std::size_t j = i + 1; j < pts->size(); ++j)
                if ((*pts)[i] == (*pts)[j])
                    throw RepeatedPoint("verify_recursion: repeated point");
        }
    }

    auto inv = [](const std::vector<Rational>& pts) {
        std::vector<Rational> r;
        for (const Rational& x : pts) r.push_back(Rational(1) / x);
        return r;
    };
    std::vector<Rational> inv_mu = inv(mu_points), inv_nu = inv(nu_points);

    // left side from the solved level-(k+1) tables
    auto solutions_at = [&](int n) { return solve_tau_system(n, n); };
    BetaSeries lhs(D);
    {
        auto H = solve_tau_system(P, P);
        BetaSeries r0 = w.r0_of(-P, D);
        for (const auto& [key, rp] : H) {
            Rational c = power_sum_product_at(key.first, inv_nu) *
                         power_sum_product_at(key.second, inv_mu);
            if (c == 0) continue;
            lhs += rp.substituted(w, D) * r0 * c;
        }
    }

    // leading term
    BetaSeries rhs = (w.rho(k, D) * w.rho(-1, D).inverse()) *
                     (detail::leading_alternant(mu_points) *
                      detail::leading_alternant(nu_points));

    // groups: Nj = 1..k hatted down to Nj remaining points, m hats
    for (int Nj = 1; Nj <= k; ++Nj) {
        const int m = P - Nj;
        for (int ls = -Nj; ls <= k - Nj; ++ls) {
            const int nprime = k - ls - Nj;
            if (nprime < 0) continue;
            const int total = nprime - Nj - Nj * (Nj - 1) / 2;
            auto tuples = descending_tuples(Nj, ls + 1, total);

            // aggregate route: per ordered hat tuple, Lagrange prefactors
            // times the truncated expansion at the remaining points
            BetaSeries group(D);
            bool group_nonzero = false;

            auto hat_prefactor = [&](const std::vector<int>& alpha,
                                     const std::vector<Rational>& pts) {
                Rational val(1);
                for (std::size_t j = 0; j < alpha.size(); ++j) {
                    int e = (j + 1 < alpha.size()) ? (k - static_cast<int>(j))
                                                   : (-ls - 1);
                    val *= pow_rational(pts[static_cast<std::size_t>(alpha[j])], e);
                    Rational den(1);
                    for (int i = 0; i < P; ++i) {
                        bool in_prefix = false;
                        for (std::size_t t = 0; t <= j; ++t)
                            if (alpha[t] == i) in_prefix = true;
                        if (in_prefix) continue;
                        den *= pts[static_cast<std::size_t>(alpha[j])] -
                               pts[static_cast<std::size_t>(i)];
                    }
                    val /= den;
                }
                return val;
            };

            std::vector<std::vector<int>> hat_tuples;
            {
                std::vector<int> cur;
                std::vector<bool> used(static_cast<std::size_t>(P), false);
                std::function<void()> rec = [&]() {
                    if (static_cast<int>(cur.size()) == m) {
                        hat_tuples.push_back(cur);
                        return;
                    }
                    for (int a = 0; a < P; ++a) {
                        if (used[static_cast<std::size_t>(a)]) continue;
                        used[static_cast<std::size_t>(a)] = true;
                        cur.push_back(a);
                        rec();
                        cur.pop_back();
                        used[static_cast<std::size_t>(a)] = false;
                    }
                };
                rec();
            }

            if (!tuples.empty()) {
                BetaSeries r0Nj = w.r0_of(-Nj, D);
                for (const auto& alpha : hat_tuples) {
                    Rational pm = hat_prefactor(alpha, mu_points);
                    if (pm == 0) continue;
                    std::vector<Rational> rem_mu;
                    for (int i = 0; i < P; ++i)
                        if (std::find(alpha.begin(), alpha.end(), i) == alpha.end())
                            rem_mu.push_back(mu_points[static_cast<std::size_t>(i)]);
                    for (const auto& beta : hat_tuples) {
                        Rational pn = hat_prefactor(beta, nu_points);
                        if (pn == 0) continue;
                        std::vector<Rational> rem_nu;
                        for (int i = 0; i < P; ++i)
                            if (std::find(beta.begin(), beta.end(), i) == beta.end())
                                rem_nu.push_back(nu_points[static_cast<std::size_t>(i)]);
                        BetaSeries V(D);
                        for (const auto& lt : tuples) {
                            Rational c = bialternant_value(lt, rem_nu) *
                                         bialternant_value(lt, rem_mu);
                            if (c == 0) continue;
                            BetaSeries prod = BetaSeries::one(D);
                            for (int l : lt) prod *= w.rho(l, D);
                            V += prod * c;
                        }
                        V *= r0Nj;
                        group += V * (pm * pn);
                        group_nonzero = true;
                    }
                }
            }

            // formal-rho route through bar_p where the filtered tables
            // exist; must reproduce the aggregate exactly
            if (nprime <= Nj) {
                auto H = solutions_at(nprime);
                BetaSeries formal(D);
                for (const auto& om : partitions_of(nprime)) {
                    Rational bp_om = bar_p(nu_points, m, ls, om);
                    if (bp_om == 0) continue;
                    for (const auto& sg : partitions_of(nprime)) {
                        Rational bp_sg = bar_p(mu_points, m, ls, sg);
                        if (bp_sg == 0) continue;
                        BetaSeries term = detail::filtered_H_series(
                            H.at({om, sg}), nprime, Nj, ls + 1, w, D);
                        formal += term * (bp_om * bp_sg);
                    }
                }
                if (!(formal == group))
                    throw Error("verify_recursion: filtered formal-rho route "
                                "disagrees with aggregated route at Nj=" +
                                std::to_string(Nj) + " l=" + std::to_string(ls));
            }

            if (group_nonzero) {
                BetaSeries pref = w.rho(ls, D) * w.rho(-Nj - 1, D).inverse();
                rhs += pref * group;
            }
        }
    }

    return RecursionReport(std::move(lhs), std::move(rhs));
}

}  // namespace hurwitz
