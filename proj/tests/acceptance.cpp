// Acceptance gate: every release-blocking check in one binary.
//
// Each criterion prints exactly one PASS/FAIL line with its elapsed time and
// must finish inside its time budget.  The process exits 0 only when all
// criteria pass.  Criteria are self-contained: they rebuild whatever tables
// they need and never rely on state from earlier criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/routes.hpp"

using namespace hurwitz;

namespace {

struct Outcome {
    bool pass;
    std::string detail;  // shown on FAIL only
};

int failures = 0;

void run(const std::string& name, double budget_seconds,
         const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    if (out.pass && secs > budget_seconds) {
        out.pass = false;
        out.detail = "exceeded time budget of " + std::to_string(budget_seconds) + "s";
    }
    std::printf("%s  %s  (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", name.c_str(), secs,
                out.detail.empty() ? "" : "  -- ", out.detail.c_str());
    if (!out.pass) ++failures;
}

std::string pair_label(const Partition& mu, const Partition& nu, int d) {
    return format_partition(mu) + " x " + format_partition(nu) + " d=" + std::to_string(d);
}

/// The degree-d coefficient symbol of the generating function: g_d as a
/// polynomial variable, with the constant-term normalisation g_0 = 1.
LaurentPoly g_sym(int d) {
    return d == 0 ? LaurentPoly(Rational(1)) : LaurentPoly::variable(var_g(d));
}

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), coeff(-6, 6), var(1, 3), expo(-2, 3);
    LaurentPoly p(Rational(0));
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<std::pair<VarId, int>> factors;
        int nv = var(rng) - 1;
        for (int j = 0; j < nv; ++j)
            factors.emplace_back(j % 2 ? var_mu(var(rng)) : var_nu(var(rng)), expo(rng));
        p = p + LaurentPoly::monomial(Monomial(std::move(factors)), Rational(coeff(rng)));
    }
    return p;
}

// ---------------------------------------------------------------------------

Outcome classical_values() {
    Rational a = hurwitz_character({Partition{3}, Partition{3}});
    Rational ab = hurwitz_count_bruteforce({Partition{3}, Partition{3}}, 2);
    if (a != Rational(1, 3) || ab != Rational(1, 3))
        return {false, "triple-cycle pair gave " + to_string(a) + " / " + to_string(ab)};
    std::vector<Partition> triple{{2, 1}, {2, 1}, {3}};
    Rational b = hurwitz_character(triple);
    Rational bb = hurwitz_count_bruteforce(triple, 2);
    if (b != Rational(1) || bb != Rational(1))
        return {false, "three-profile value gave " + to_string(b) + " / " + to_string(bb)};
    return {true, ""};
}

Outcome exhaustive_bruteforce() {
    for (int n = 1; n <= 5; ++n) {
        const auto parts = partitions_of(n);
        const int m = static_cast<int>(parts.size());
        for (int k = 1; k <= 3; ++k) {
            std::vector<int> idx(k, 0);
            while (true) {
                std::vector<Partition> profiles;
                for (int j = 0; j < k; ++j) profiles.push_back(parts[idx[j]]);
                Rational ch = hurwitz_character(profiles);
                Rational bf = hurwitz_count_bruteforce(profiles, 4);
                if (ch != bf) {
                    std::string label;
                    for (const auto& p : profiles) label += format_partition(p) + " ";
                    return {false, "mismatch at " + label + ": character " + to_string(ch) +
                                       ", brute force " + to_string(bf)};
                }
                int pos = k - 1;
                while (pos >= 0 && ++idx[pos] == m) idx[pos--] = 0;
                if (pos < 0) break;
            }
        }
    }
    return {true, ""};
}

/// Exact evaluation cross-check: both polynomials agree at `count` random
/// rational assignments of every variable appearing in either.
bool agree_at_points(const LaurentPoly& a, const LaurentPoly& b, int count,
                     std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 30), den(1, 5);
    std::set<VarId> vars;
    for (VarId v : a.variables()) vars.insert(v);
    for (VarId v : b.variables()) vars.insert(v);
    for (int t = 0; t < count; ++t) {
        std::map<VarId, Rational> point;
        for (VarId v : vars) point[v] = Rational(num(rng), den(rng));
        if (a.evaluated(point) != b.evaluated(point)) return false;
    }
    return true;
}

Outcome two_sheet_closed_forms() {
    const int dmax = 4;
    WeightFunc w = WeightFunc::formal(dmax);
    std::mt19937_64 rng(611);
    const std::vector<Partition> parts{{2}, {1, 1}};
    for (const auto& mu : parts)
        for (const auto& nu : parts)
            for (int d = 0; d <= dmax; ++d) {
                int sign = (d % 2 == 0) ? 1 : -1;
                int rel = (mu == nu) ? 1 : -1;
                LaurentPoly expect = g_sym(d) * Rational(1 + rel * sign, 4);
                LaurentPoly via_char = weighted_hurwitz_character(w, mu, nu, d);
                LaurentPoly via_det =
                    weighted_hurwitz(w, mu, nu, d, Route::DETERMINANT).value;
                if (via_char != expect || via_det != expect)
                    return {false, "closed form broke at " + pair_label(mu, nu, d)};
                if (!agree_at_points(expect, via_char, d + 1, rng) ||
                    !agree_at_points(expect, via_det, d + 1, rng))
                    return {false, "evaluation mismatch at " + pair_label(mu, nu, d)};
            }
    return {true, ""};
}

Outcome three_sheet_closed_forms() {
    const int dmax = 3;
    WeightFunc w = WeightFunc::formal(dmax);
    std::mt19937_64 rng(612);

    auto S1 = [](int d) {
        LaurentPoly s(Rational(0));
        for (int k = 0; k <= d; ++k) s = s + g_sym(k) * g_sym(d - k) * Rational(1 << k);
        return s;
    };
    auto S2 = [](int d) {
        LaurentPoly s(Rational(0));
        for (int k = 0; k <= d; ++k)
            s = s + g_sym(k) * g_sym(d - k) * Rational(k % 2 ? -1 : 1);
        return s;
    };
    auto S3 = [&](int d) { return S1(d) * Rational(d % 2 ? -1 : 1); };

    const Partition p3{3}, p21{2, 1}, p111{1, 1, 1};
    auto expect_for = [&](const Partition& mu, const Partition& nu, int d) {
        auto is = [](const Partition& a, const Partition& b, const Partition& x,
                     const Partition& y) {
            return (a == x && b == y) || (a == y && b == x);
        };
        if (mu == p3 && nu == p3) return (S1(d) + S2(d) + S3(d)) * Rational(1, 9);
        if (is(mu, nu, p3, p21)) return (S1(d) - S3(d)) * Rational(1, 6);
        if (is(mu, nu, p3, p111))
            return S1(d) * Rational(1, 18) - S2(d) * Rational(1, 9) +
                   S3(d) * Rational(1, 18);
        if (mu == p21 && nu == p21) return (S1(d) + S3(d)) * Rational(1, 4);
        if (is(mu, nu, p21, p111)) return (S1(d) - S3(d)) * Rational(1, 12);
        return S1(d) * Rational(1, 36) + S2(d) * Rational(1, 9) + S3(d) * Rational(1, 36);
    };

    for (const auto& mu : partitions_of(3))
        for (const auto& nu : partitions_of(3))
            for (int d = 0; d <= dmax; ++d) {
                LaurentPoly expect = expect_for(mu, nu, d);
                LaurentPoly via_char = weighted_hurwitz_character(w, mu, nu, d);
                LaurentPoly via_det =
                    weighted_hurwitz(w, mu, nu, d, Route::DETERMINANT).value;
                if (via_char != expect || via_det != expect)
                    return {false, "closed form broke at " + pair_label(mu, nu, d)};
                if (!agree_at_points(expect, via_char, d + 1, rng))
                    return {false, "evaluation mismatch at " + pair_label(mu, nu, d)};
            }

    // Spot value: degree-2 count for the identity/triple-cycle pair.
    LaurentPoly spot = weighted_hurwitz_character(w, p111, p3, 2);
    LaurentPoly spot_expect =
        (LaurentPoly::variable(var_g(1)).pow(2) + LaurentPoly::variable(var_g(2))) *
        Rational(1, 3);
    if (spot != spot_expect)
        return {false, "degree-2 spot value gave " + spot.str()};
    return {true, ""};
}

Outcome determinant_vs_character_truncations() {
    const int D = 3;
    std::vector<WeightFunc> weights;
    weights.push_back(WeightFunc::exp_truncated(D));
    weights.push_back(WeightFunc::from_parameters(
        {Rational(1), Rational(1, 2), Rational(-1, 3), Rational(2)}));
    for (const auto& w : weights)
        for (int n = 1; n <= 3; ++n) {
            MiwaContext ctx(n, n, D);
            auto det = tau_det_truncation(ctx, w);
            auto schur = tau_schur_truncation(ctx, w);
            auto diff = TauTruncation::first_difference(det, schur);
            if (diff) {
                auto [om, sg, d] = *diff;
                return {false, "first difference at N=" + std::to_string(n) + ", " +
                                   pair_label(om, sg, d)};
            }
        }
    return {true, ""};
}

Outcome dimension_stability() {
    const int D = 3;
    WeightFunc w = WeightFunc::formal(D);
    for (int n = 2; n <= 3; ++n) {
        auto low = solve_tau_system(n, n);
        auto high = solve_tau_system(n + 1, n);
        for (const auto& mu : partitions_of(n))
            for (const auto& nu : partitions_of(n)) {
                BetaSeries a =
                    low.at({mu, nu}).substituted(w, D) * w.r0_of(-n, D);
                BetaSeries b =
                    high.at({mu, nu}).substituted(w, D) * w.r0_of(-(n + 1), D);
                if (!(a == b))
                    return {false, "tables differ at n=" + std::to_string(n) + ", " +
                                       format_partition(mu) + " x " + format_partition(nu)};
            }
    }
    return {true, ""};
}

Outcome determinant_expansion() {
    WeightFunc w = WeightFunc::exp_truncated(2);
    for (auto [N, P] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}})
        if (!verify_det_expansion(N, P, w, N + 1, 2))
            return {false, "expansion failed at N=" + std::to_string(N) +
                               ", P=" + std::to_string(P)};
    return {true, ""};
}

Outcome recursion_identity() {
    WeightFunc w = WeightFunc::exp_truncated(2);
    std::mt19937_64 rng(20260823);
    std::uniform_int_distribution<int> num(1, 40), den(1, 6);
    auto draw_points = [&](int count) {
        std::set<Rational> uniq;
        while (static_cast<int>(uniq.size()) < count)
            uniq.insert(Rational(num(rng), den(rng)));
        return std::vector<Rational>(uniq.begin(), uniq.end());
    };
    for (int trial = 0; trial < 3; ++trial) {
        auto mp = draw_points(3);
        auto np = draw_points(3);
        auto rep = verify_recursion(2, w, mp, np, 2);
        if (!rep.pass)
            return {false, "trial " + std::to_string(trial) + " first mismatch at degree " +
                               std::to_string(rep.first_mismatch_d)};
    }
    return {true, ""};
}

Outcome degree_zero_diagonal() {
    for (int n = 1; n <= 3; ++n)
        for (const auto& entry : d0_matrix_report(n))
            if (!entry.pass)
                return {false, "matrix count mismatch at n=" + std::to_string(n) + ", " +
                                   format_partition(entry.col_sums) + " x " +
                                   format_partition(entry.row_sums)};
    WeightFunc w = WeightFunc::formal(0);
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : partitions_of(n))
            for (const auto& nu : partitions_of(n)) {
                LaurentPoly got = weighted_hurwitz_character(w, mu, nu, 0);
                LaurentPoly expect =
                    mu == nu ? LaurentPoly(Rational(Rational(1) / z_order(mu)))
                             : LaurentPoly(Rational(0));
                if (got != expect)
                    return {false, "degree-0 value wrong at " + pair_label(mu, nu, 0)};
            }
    return {true, ""};
}

Outcome path_route_agreement() {
    const std::vector<std::vector<Rational>> cvecs{
        {Rational(1), Rational(1, 2), Rational(-2), Rational(3)},
        {Rational(5), Rational(-1, 3), Rational(1, 4), Rational(2)}};
    for (const auto& c : cvecs) {
        WeightFunc w = WeightFunc::from_parameters(c);
        for (int n = 1; n <= 4; ++n)
            for (const auto& mu : partitions_of(n))
                for (const auto& nu : partitions_of(n))
                    for (int d = 0; d <= 3; ++d) {
                        LaurentPoly a = weighted_hurwitz_cayley(w, mu, nu, d, 4);
                        LaurentPoly b = weighted_hurwitz_character(w, mu, nu, d);
                        if (a != b)
                            return {false, "routes differ at " + pair_label(mu, nu, d) +
                                               ": paths " + a.str() + ", character " +
                                               b.str()};
                    }
    }
    return {true, ""};
}

Outcome coefficient_sums() {
    // The sum of every weighted number of weight n at fixed degree equals the
    // matching coefficient of the full ladder product with top index n-1.
    const int dmax = 3;
    WeightFunc w = WeightFunc::exp_truncated(dmax);
    for (int n = 1; n <= 5; ++n) {
        BetaSeries acc(dmax);
        for (const auto& om : partitions_of(n))
            for (const auto& sg : partitions_of(n))
                acc += weighted_hurwitz_series(w, om, sg, dmax);
        if (!(acc == w.rho(n - 1, dmax)))
            return {false, "ladder-sum identity failed at n=" + std::to_string(n)};
    }
    return {true, ""};
}

Outcome property_suites() {
    std::mt19937_64 rng(777);

    // Ring axioms on 1000 random triples.
    for (int t = 0; t < 1000; ++t) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        if (!((a + b) + c == a + (b + c)) || !(a * b == b * a) ||
            !(a * (b + c) == a * b + a * c) || !((a * b) * c == a * (b * c)) ||
            !(a + LaurentPoly(Rational(0)) == a) || !(a * LaurentPoly(Rational(1)) == a))
            return {false, "ring axiom failed on random triple " + std::to_string(t)};
    }

    // Character orthogonality through n = 8.
    for (int n = 1; n <= 8; ++n) {
        CharacterTable table = character_table(n);
        const auto parts = partitions_of(n);
        Rational order = factorial(n);
        for (const auto& la : parts)
            for (const auto& lb : parts) {
                Rational row(0);
                for (const auto& mu : parts)
                    row += Rational(order / z_order(mu)) *
                           Rational(table.value(la, mu) * table.value(lb, mu));
                if (row != (la == lb ? order : Rational(0)))
                    return {false, "row orthogonality failed at n=" + std::to_string(n)};
            }
        for (const auto& mu : parts)
            for (const auto& nu : parts) {
                Rational col(0);
                for (const auto& la : parts)
                    col += Rational(table.value(la, mu) * table.value(la, nu));
                if (col != (mu == nu ? Rational(z_order(mu)) : Rational(0)))
                    return {false, "column orthogonality failed at n=" + std::to_string(n)};
            }
    }

    // Bialternant Schur evaluation matches the character expansion.
    std::uniform_int_distribution<int> num(1, 30), den(1, 5), npts(1, 4), wt(0, 6);
    int done = 0;
    while (done < 120) {
        int n = wt(rng);
        const auto shapes = partitions_of(n);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(shapes.size()) - 1);
        Partition lambda = shapes[pick(rng)];
        std::set<Rational> uniq;
        int count = npts(rng);
        while (static_cast<int>(uniq.size()) < count) {
            Rational r(num(rng), den(rng));
            if (r != 0) uniq.insert(r);
        }
        std::vector<Rational> pts(uniq.begin(), uniq.end());
        if (schur_at_bialternant(lambda, pts) != schur_at_via_characters(lambda, pts))
            return {false, "Schur evaluations disagree for " + format_partition(lambda)};
        ++done;
    }

    // Series inversion is an involution on unit series.
    std::uniform_int_distribution<int> sc(-5, 5);
    for (int t = 0; t < 100; ++t) {
        BetaSeries s = BetaSeries::one(4);
        for (int k = 1; k <= 4; ++k)
            s.set_coefficient(k, LaurentPoly(Rational(sc(rng), 1 + t % 3)));
        BetaSeries inv = s.inverse();
        if (!(inv.inverse() == s) || !(s * inv == BetaSeries::one(4)))
            return {false, "series inversion involution failed on case " + std::to_string(t)};
    }

    return {true, ""};
}

}  // namespace

int main() {
    run("criterion-01-classical-values", 1.0, classical_values);
    run("criterion-02-exhaustive-bruteforce", 120.0, exhaustive_bruteforce);
    run("criterion-03-two-sheet-closed-forms", 10.0, two_sheet_closed_forms);
    run("criterion-04-three-sheet-closed-forms", 120.0, three_sheet_closed_forms);
    run("criterion-05-determinant-vs-character-truncations", 300.0,
        determinant_vs_character_truncations);
    run("criterion-06-dimension-stability", 300.0, dimension_stability);
    run("criterion-07-determinant-expansion", 120.0, determinant_expansion);
    run("criterion-08-recursion-identity", 300.0, recursion_identity);
    run("criterion-09-degree-zero-diagonal", 60.0, degree_zero_diagonal);
    run("criterion-10-path-route-agreement", 300.0, path_route_agreement);
    run("criterion-11-coefficient-sums", 60.0, coefficient_sums);
    run("criterion-12-property-suites", 120.0, property_suites);

    if (failures > 0) {
        std::printf("acceptance: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("acceptance: all 12 criteria passed\n");
    return 0;
}
