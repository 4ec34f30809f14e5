#pragma once

/// One entry point over the independent computation routes for weighted
/// Hurwitz values, so callers (CLI, tests) can request "the same number, a
/// different way" and compare.

#include <string>
#include <vector>

#include "hurwitz/error.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/taudet.hpp"
#include "hurwitz/weights.hpp"

namespace hurwitz {

enum class Route {
    CHARACTER,    // weighted character sum over partitions of n
    DEFINITION,   // branch-profile expansion with transposition-tuple weights
    DETERMINANT,  // solved determinant-representation tables at N = n
    CAYLEY,       // monotone transposition-path counts in the Cayley graph
    MATRIX_D0,    // contingency-matrix counts (degree 0 only)
};

inline std::string route_name(Route r) {
    switch (r) {
        case Route::CHARACTER: return "character";
        case Route::DEFINITION: return "definition";
        case Route::DETERMINANT: return "determinant";
        case Route::CAYLEY: return "cayley";
        case Route::MATRIX_D0: return "d0-matrix";
    }
    return "?";
}

inline Route parse_route(const std::string& s) {
    if (s == "character") return Route::CHARACTER;
    if (s == "definition") return Route::DEFINITION;
    if (s == "determinant") return Route::DETERMINANT;
    if (s == "cayley") return Route::CAYLEY;
    if (s == "d0-matrix") return Route::MATRIX_D0;
    throw Error("unknown route '" + s + "'");
}

/// Routes that can produce H^d(mu, nu) for this degree with this weight
/// function.  DEFINITION needs the parameter form; MATRIX_D0 exists only at
/// d = 0; CAYLEY is exponential in n and capped here to keep "all routes"
/// runs finite.
inline std::vector<Route> applicable_routes(const WeightFunc& w, const Partition& mu,
                                            const Partition& nu, int d) {
    std::vector<Route> out{Route::CHARACTER, Route::DETERMINANT};
    if (w.has_parameters()) out.push_back(Route::DEFINITION);
    if (weight(mu) <= 6 && weight(nu) <= 6) out.push_back(Route::CAYLEY);
    if (d == 0) out.push_back(Route::MATRIX_D0);
    return out;
}

struct WeightedHurwitzResult {
    Partition mu;
    Partition nu;
    int d = 0;
    Route route = Route::CHARACTER;
    LaurentPoly value;  // polynomial in the weight data (a constant when the
                        // weight function is numeric in its G_k)
};

/// Compute H^d(mu, nu) by the requested route.  Unequal weights give value
/// 0 (the transpositions cannot connect the two profiles), not an error —
/// errors are reserved for requests the route cannot express at all.
inline WeightedHurwitzResult weighted_hurwitz(const WeightFunc& w, const Partition& mu,
                                              const Partition& nu, int d, Route route,
                                              int threads = 1) {
    WeightedHurwitzResult res{mu, nu, d, route, LaurentPoly()};
    if (weight(mu) != weight(nu)) return res;
    switch (route) {
        case Route::CHARACTER:
            res.value = weighted_hurwitz_character(w, mu, nu, d);
            break;
        case Route::DEFINITION:
            res.value = LaurentPoly(weighted_hurwitz_definition(w, mu, nu, d));
            break;
        case Route::DETERMINANT: {
            const int n = weight(mu);
            auto H = solve_tau_system(n, n);
            BetaSeries s = H.at({mu, nu}).substituted(w, d) * w.r0_of(-n, d);
            res.value = s.coefficient(d);
            break;
        }
        case Route::CAYLEY:
            res.value = weighted_hurwitz_cayley(w, mu, nu, d, threads);
            break;
        case Route::MATRIX_D0:
            if (d != 0)
                throw Error("d0-matrix route is defined only for degree 0");
            res.value = LaurentPoly(hurwitz_d0_from_matrices(mu, nu));
            break;
    }
    return res;
}

}  // namespace hurwitz
