#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "affgraph/laurent.hpp"

namespace affgraph::modp {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t sub(std::uint64_t a, std::uint64_t b);
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t power(std::uint64_t a, long long e);  // negative e uses the inverse
std::uint64_t inv(std::uint64_t a);

// Image of a rational whose denominator is prime to kPrime.
std::uint64_t reduce(const Rational& q);
// Smallest-height rational congruent to a, when one with |num|, den < sqrt(p/2) exists.
std::optional<Rational> reconstruct(std::uint64_t a);

// In-place Gauss-Jordan inverse of a row-major n x n matrix; false when singular.
bool invert(std::vector<std::uint64_t>& a, int n);

// Candidate multiplicative basis for the adjacency matrix `adj` at vertex i0,
// found by sparse interpolation modulo kPrime. basis[k][i][j] is entry (i, j) of b_k.
// The supports are guessed from a grading of the graph, allowing exponents up to
// `radius` steps outside the orthant of the adjacency exponents, so callers must
// verify the candidates exactly before trusting them.
// When the path matrix is singular at the first evaluation and `allow_general`
// is set, each evaluation is solved from the linear conditions on b_k together
// with associativity. Entries listed in `gauge` (flattened as (k*n + i)*n + j)
// are additionally forced to vanish. When the solution is not unique the
// result has an empty basis and lists the entries that vary in `free_entries`.
struct ModularBasis {
    bool path_matrix_invertible = false;  // proven by an evaluation with nonzero determinant
    std::vector<std::vector<std::vector<LaurentPoly>>> basis;
    std::vector<std::size_t> free_entries;
};
std::optional<ModularBasis> interpolate_basis(const std::vector<std::vector<LaurentPoly>>& adj, int i0, int nvars,
                                              int radius = 0, bool allow_general = false,
                                              const std::vector<std::size_t>& gauge = {});

}  // namespace affgraph::modp
