#pragma once

/// Symmetric group combinatorics by direct enumeration.
///
/// These routines exist to be slow and obviously correct: they count
/// factorizations and weighted paths in S_n by walking actual permutations,
/// providing ground truth against which the character-theoretic formulas are
/// tested.  Feasible for n up to about 7.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <thread>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// A permutation of {0..n-1} as its image table.
using Permutation = std::vector<int>;

inline Permutation identity_perm(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

/// Function composition (a o b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] = a[static_cast<std::size_t>(b[i])];
    return r;
}

inline Permutation inverse(const Permutation& p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return r;
}

inline Partition cycle_type(const Permutation& p) {
    const std::size_t n = p.size();
    std::vector<bool> seen(n, false);
    Partition type;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(p[j]);
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

/// All elements of the conjugacy class C_mu in S_n, n = |mu|: start from one
/// representative with the cycles laid out consecutively and close under
/// conjugation by adjacent transpositions.  Cost O(|C_mu| * n) instead of
/// filtering all n! permutations.
inline std::vector<Permutation> class_elements(const Partition& mu) {
    const int n = weight(mu);
    if (n > 9) throw TooLarge("class_elements: n too large for enumeration");
    if (n == 0) return {Permutation{}};

    Permutation rep(static_cast<std::size_t>(n));
    int base = 0;
    for (int part : mu) {
        for (int i = 0; i < part; ++i)
            rep[static_cast<std::size_t>(base + i)] = base + (i + 1) % part;
        base += part;
    }

    std::set<Permutation> seen{rep};
    std::vector<Permutation> frontier{rep};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier) {
            for (int a = 0; a + 1 < n; ++a) {
                // conjugate by the adjacent transposition t = (a, a+1)
                Permutation q = p;
                std::swap(q[static_cast<std::size_t>(a)],
                          q[static_cast<std::size_t>(a) + 1]);
                for (auto& img : q) {
                    if (img == a)
                        img = a + 1;
                    else if (img == a + 1)
                        img = a;
                }
                if (seen.insert(q).second) next.push_back(q);
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

namespace detail {
/// Split [0, count) into chunks, run fn(chunk_begin, chunk_end) on each via
/// worker threads, and return the per-chunk results in index order so the
/// caller's reduction is deterministic.
template <typename Fn>
std::vector<Integer> chunked_counts(std::size_t count, int threads, Fn fn) {
    if (threads < 1) threads = 1;
    std::size_t nchunks = std::min<std::size_t>(static_cast<std::size_t>(threads),
                                                count == 0 ? 1 : count);
    std::vector<Integer> results(nchunks, Integer(0));
    if (nchunks <= 1) {
        results[0] = fn(std::size_t{0}, count);
        return results;
    }
    std::vector<std::thread> pool;
    std::size_t base = count / nchunks, extra = count % nchunks, start = 0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        std::size_t len = base + (c < extra ? 1 : 0);
        pool.emplace_back(
            [&results, c, start, len, &fn]() { results[c] = fn(start, start + len); });
        start += len;
    }
    for (auto& t : pool) t.join();
    return results;
}
}  // namespace detail

/// Number of tuples (s_1, ..., s_k) with s_i in C_{profiles[i]} and
/// s_1 s_2 ... s_k = identity, divided by n!.  This is the most literal
/// reading of a Hurwitz count available and serves as the oracle for the
/// character formula.  Profiles must all partition the same n; at least one
/// profile is required.
inline Rational hurwitz_count_bruteforce(const std::vector<Partition>& profiles,
                                         int threads = 1) {
    if (profiles.empty())
        throw EmptyProfileList("hurwitz_count_bruteforce: no profiles given");
    const int n = weight(profiles[0]);
    for (const auto& mu : profiles)
        if (weight(mu) != n)
            throw WeightMismatch("hurwitz_count_bruteforce: profiles of unequal weight");

    const std::size_t k = profiles.size();
    // Enumerate the first k-1 factors; the last is forced to be the inverse
    // of their product, so just test its cycle type.
    std::vector<std::vector<Permutation>> classes;
    for (std::size_t i = 0; i + 1 < k; ++i) classes.push_back(class_elements(profiles[i]));
    const Partition& last = profiles[k - 1];

    auto count_range = [&](std::size_t begin, std::size_t end) -> Integer {
        Integer count(0);
        std::function<void(std::size_t, const Permutation&)> rec =
            [&](std::size_t depth, const Permutation& prod) {
                if (depth == classes.size()) {
                    // product of all k must be id <=> s_k = prod^{-1}
                    if (cycle_type(prod) == last) ++count;
                    return;
                }
                std::size_t lo = depth == 0 ? begin : 0;
                std::size_t hi = depth == 0 ? end : classes[depth].size();
                for (std::size_t i = lo; i < hi; ++i)
                    rec(depth + 1, compose(prod, classes[depth][i]));
            };
        if (classes.empty()) {
            // k = 1: the single factor must itself be the identity
            if (begin == 0 && last == cycle_type(identity_perm(n))) count = 1;
        } else {
            rec(0, identity_perm(n));
        }
        return count;
    };

    std::size_t outer = classes.empty() ? 1 : classes[0].size();
    Integer total(0);
    for (const Integer& c : detail::chunked_counts(outer, threads, count_range)) total += c;
    return Rational(total) / Rational(factorial(static_cast<unsigned>(n)));
}

/// Count weakly monotone transposition paths from class mu to class nu with
/// a prescribed step signature.
///
/// A path is a sequence of transpositions (a_1 b_1), ..., (a_d b_d) with
/// a_i < b_i and b_1 <= b_2 <= ... <= b_d, applied on the left one after
/// another to a start permutation g in C_mu; it contributes when the final
/// permutation lies in C_nu.  The signature of the path is the partition
/// formed by sorting the lengths of maximal runs of equal b_i.  Returns the
/// number of (g, path) pairs whose signature equals sig; dividing by n!
/// yields the path-model coefficient.
inline Integer monotone_path_count(const Partition& sig, const Partition& mu,
                                   const Partition& nu, int threads = 1) {
    if (weight(mu) != weight(nu))
        throw WeightMismatch("monotone_path_count: |mu| != |nu|");
    const int n = weight(mu);
    const int d = weight(sig);
    std::vector<Permutation> cls = class_elements(mu);

    auto count_range = [&](std::size_t begin, std::size_t end) -> Integer {
        Integer count(0);
        std::vector<int> bs(static_cast<std::size_t>(d));
        std::function<void(int, int, const Permutation&)> rec =
            [&](int depth, int last_b, const Permutation& p) {
                if (depth == d) {
                    if (cycle_type(p) != nu) return;
                    // signature = sorted lengths of runs of equal b values
                    Partition runs;
                    int i = 0;
                    while (i < d) {
                        int j = i;
                        while (j < d && bs[static_cast<std::size_t>(j)] ==
                                            bs[static_cast<std::size_t>(i)])
                            ++j;
                        runs.push_back(j - i);
                        i = j;
                    }
                    std::sort(runs.begin(), runs.end(), std::greater<int>());
                    if (runs == sig) ++count;
                    return;
                }
                for (int b = last_b; b < n; ++b)
                    for (int a = 0; a < b; ++a) {
                        Permutation t = identity_perm(n);
                        std::swap(t[static_cast<std::size_t>(a)],
                                  t[static_cast<std::size_t>(b)]);
                        bs[static_cast<std::size_t>(depth)] = b;
                        rec(depth + 1, b, compose(t, p));
                    }
            };
        for (std::size_t gi = begin; gi < end; ++gi) rec(0, 1, cls[gi]);
        return count;
    };

    Integer total(0);
    for (const Integer& c : detail::chunked_counts(cls.size(), threads, count_range))
        total += c;
    return total;
}

}  // namespace hurwitz
