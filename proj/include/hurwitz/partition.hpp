#pragma once

/// Integer partitions.
///
/// A partition is stored as a weakly decreasing vector of positive parts;
/// the empty partition is the empty vector.  Partitions name both the
/// cycle types of permutations (ramification profiles) and the irreducible
/// representations of the symmetric group, so this header carries the
/// combinatorial maps needed by both readings: conjugation, hooks, contents,
/// centralizer orders, Frobenius coordinates.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

using Partition = std::vector<int>;

/// Sum of parts |mu|.
inline int weight(const Partition& mu) {
    return std::accumulate(mu.begin(), mu.end(), 0);
}

/// Number of parts l(mu).
inline int length(const Partition& mu) { return static_cast<int>(mu.size()); }

/// Co-length |mu| - l(mu): the minimal number of transpositions whose product
/// has cycle type mu, and the grading used by weighted counts.
inline int colength(const Partition& mu) { return weight(mu) - length(mu); }

/// Sort parts descending and drop zeros; rejects negative parts.
inline Partition normalized(Partition mu) {
    for (int p : mu)
        if (p < 0) throw Error("partition: negative part");
    std::sort(mu.begin(), mu.end(), std::greater<int>());
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    return mu;
}

/// True when parts are weakly decreasing and strictly positive.
inline bool is_valid_partition(const Partition& mu) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] <= 0) return false;
        if (i > 0 && mu[i] > mu[i - 1]) return false;
    }
    return true;
}

/// All partitions of n, in reverse lexicographic order ([n] first, [1^n]
/// last).  n = 0 yields the single empty partition.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n < 0) throw Error("partitions_of: negative n");
    rec(n, n);
    return out;
}

/// Partitions of n with at most max_len parts.
inline std::vector<Partition> partitions_of_max_length(int n, int max_len) {
    std::vector<Partition> out;
    for (const auto& mu : partitions_of(n))
        if (length(mu) <= max_len) out.push_back(mu);
    return out;
}

/// Conjugate (transposed) partition.
inline Partition conjugate(const Partition& mu) {
    Partition out;
    if (mu.empty()) return out;
    out.resize(mu[0], 0);
    for (int p : mu)
        for (int j = 0; j < p; ++j) out[j] += 1;
    return out;
}

/// Multiplicity of part p in mu.
inline int multiplicity(const Partition& mu, int p) {
    return static_cast<int>(std::count(mu.begin(), mu.end(), p));
}

/// Centralizer order z_mu = prod_j j^{m_j} m_j! where m_j is the multiplicity
/// of j.  |C_mu| = n!/z_mu is the conjugacy class size.
inline Integer z_order(const Partition& mu) {
    Integer z(1);
    int prev = -1, run = 0;
    auto flush = [&]() {
        if (run > 0) {
            Integer pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(prev),
                          static_cast<unsigned long>(run));
            z *= pw * factorial(static_cast<unsigned>(run));
        }
    };
    for (int p : mu) {
        if (p == prev) {
            ++run;
        } else {
            flush();
            prev = p;
            run = 1;
        }
    }
    flush();
    return z;
}

/// Conjugacy class size |C_mu| in S_{|mu|}.
inline Integer class_size(const Partition& mu) {
    return factorial(static_cast<unsigned>(weight(mu))) / z_order(mu);
}

/// Hook length of cell (i, j) (0-based) in mu.
inline int hook_length(const Partition& mu, int i, int j) {
    Partition conj = conjugate(mu);
    return (mu[i] - j) + (conj[j] - i) - 1;
}

/// Product of all hook lengths.  dim(lambda) = n! / hook_product(lambda).
inline Integer hook_product(const Partition& mu) {
    Integer h(1);
    Partition conj = conjugate(mu);
    for (int i = 0; i < length(mu); ++i)
        for (int j = 0; j < mu[i]; ++j)
            h *= (mu[i] - j) + (conj[j] - i) - 1;
    return h;
}

/// Contents j - i of all cells, row by row.
inline std::vector<int> contents(const Partition& mu) {
    std::vector<int> out;
    for (int i = 0; i < length(mu); ++i)
        for (int j = 0; j < mu[i]; ++j) out.push_back(j - i);
    return out;
}

/// Frobenius coordinates (a | b): a_i = mu_i - i - 1/2 offsets are kept
/// integral here as arm/leg lengths of the diagonal cells,
/// a_i = mu_i - (i+1), b_i = mu'_i - (i+1) for 0 <= i < d(mu).
inline std::pair<std::vector<int>, std::vector<int>> frobenius_coordinates(
    const Partition& mu) {
    Partition conj = conjugate(mu);
    std::vector<int> a, b;
    for (int i = 0; i < length(mu); ++i) {
        if (mu[i] - (i + 1) < 0) break;
        a.push_back(mu[i] - (i + 1));
        b.push_back(conj[i] - (i + 1));
    }
    return {a, b};
}

/// Parse "[3,1,1]" or "[]" (whitespace tolerated) into a partition.
/// Parts must come out weakly decreasing and positive.
inline Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw Error("parse_partition: expected bracketed list, got '" + text + "'");
    Partition mu;
    std::string body = s.substr(1, s.size() - 2);
    if (!body.empty()) {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty())
                throw Error("parse_partition: empty item in '" + text + "'");
            std::size_t pos = 0;
            int v;
            try {
                v = std::stoi(item, &pos);
            } catch (const std::exception&) {
                throw Error("parse_partition: bad integer '" + item + "'");
            }
            if (pos != item.size())
                throw Error("parse_partition: bad integer '" + item + "'");
            mu.push_back(v);
        }
        if (body.back() == ',')
            throw Error("parse_partition: trailing comma in '" + text + "'");
    }
    if (!is_valid_partition(mu))
        throw Error("parse_partition: parts must be positive and weakly decreasing in '" +
                    text + "'");
    return mu;
}

/// Render as "[3,1,1]"; the empty partition renders as "[]".
inline std::string format_partition(const Partition& mu) {
    std::string out = "[";
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(mu[i]);
    }
    out += "]";
    return out;
}

}  // namespace hurwitz
