#include "affgraph/modular.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

namespace affgraph::modp {

std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = a + b;
    return r >= kPrime ? r - kPrime : r;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    __uint128_t z = static_cast<__uint128_t>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(z & kPrime) + static_cast<std::uint64_t>(z >> 61);
    r = (r & kPrime) + (r >> 61);
    return r >= kPrime ? r - kPrime : r;
}

std::uint64_t inv(std::uint64_t a) {
    if (a == 0) throw std::domain_error("inverse of zero modulo p");
    return power(a, static_cast<long long>(kPrime - 2));
}

std::uint64_t power(std::uint64_t a, long long e) {
    if (e < 0) return power(inv(a), -e);
    std::uint64_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(const Rational& q) {
    std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
    std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
    if (den == 0) throw std::domain_error("denominator divisible by the modulus");
    return mul(num, inv(den));
}

std::optional<Rational> reconstruct(std::uint64_t a) {
    // half-extended Euclid on (p, a), stopped at the first remainder below sqrt(p/2)
    const __int128 bound = static_cast<__int128>(1) << 30;
    __int128 r0 = kPrime, r1 = a, t0 = 0, t1 = 1;
    while (r1 >= bound) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        __int128 t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || t1 >= bound || -t1 >= bound) return std::nullopt;
    long num = static_cast<long>(r1);
    long den = static_cast<long>(t1);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool invert(std::vector<std::uint64_t>& a, int n) {
    std::vector<std::uint64_t> aug(static_cast<std::size_t>(n) * 2 * n, 0);
    const int w = 2 * n;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i * w + j] = a[i * n + j];
        aug[i * w + n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (aug[r * w + c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        if (piv != c)
            for (int j = 0; j < w; ++j) std::swap(aug[c * w + j], aug[piv * w + j]);
        std::uint64_t s = inv(aug[c * w + c]);
        for (int j = 0; j < w; ++j) aug[c * w + j] = mul(aug[c * w + j], s);
        for (int r = 0; r < n; ++r) {
            if (r == c || aug[r * w + c] == 0) continue;
            std::uint64_t f = aug[r * w + c];
            for (int j = c; j < w; ++j) aug[r * w + j] = sub(aug[r * w + j], mul(f, aug[c * w + j]));
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = aug[i * w + n + j];
    return true;
}

namespace {

struct Grading {
    std::vector<Rational> height;  // per vertex, height[i0] = 0
    std::vector<Rational> phi;     // per variable
    std::vector<int> sign;         // orthant of all exponents, per variable
};

// Solve h(i) - h(j) + phi.beta = 1 for every term z^beta of every entry A[i][j].
std::optional<Grading> find_grading(const std::vector<std::vector<LaurentPoly>>& adj, int i0, int nvars) {
    const int n = static_cast<int>(adj.size());
    const int cols = n + nvars;
    std::vector<std::vector<Rational>> rows;
    std::vector<int> sign(nvars, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [m, c] : adj[i][j].terms()) {
                std::vector<Rational> row(cols + 1, Rational(0));
                row[i] += 1;
                row[j] -= 1;
                for (int t = 0; t < nvars; ++t) {
                    row[n + t] = m[t];
                    int s = (m[t] > 0) - (m[t] < 0);
                    if (s != 0) {
                        if (sign[t] != 0 && sign[t] != s) return std::nullopt;
                        sign[t] = s;
                    }
                }
                row[cols] = 1;
                rows.push_back(std::move(row));
            }
    std::vector<Rational> anchor(cols + 1, Rational(0));
    anchor[i0] = 1;
    rows.push_back(anchor);

    // reduced row echelon form
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Rational s = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= s;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][c] == 0) continue;
            Rational f = rows[k][c];
            for (int j = c; j <= cols; ++j) rows[k][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t k = r; k < rows.size(); ++k)
        if (rows[k][cols] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = rows[k][cols];

    Grading g;
    g.height.assign(x.begin(), x.begin() + n);
    g.phi.assign(x.begin() + n, x.end());
    g.sign = sign;
    for (int t = 0; t < nvars; ++t)
        if (sign[t] != 0 && g.phi[t] * sign[t] <= 0) return std::nullopt;
    return g;
}

// All exponent vectors with phi.beta = target whose coordinates reach at most
// `radius` steps outside the orthant of the adjacency exponents.
void enumerate_support(const Grading& g, int t, const Rational& remaining, int radius, Monomial& cur,
                       std::vector<Monomial>& out) {
    const int nvars = static_cast<int>(g.phi.size());
    if (t == nvars) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    if (g.sign[t] == 0) {
        cur[t] = 0;
        enumerate_support(g, t + 1, remaining, radius, cur, out);
        return;
    }
    Rational slack = 0;
    for (int r = t + 1; r < nvars; ++r)
        if (g.sign[r] != 0) slack += Rational(radius) * g.phi[r] * g.sign[r];
    const Rational step = g.phi[t] * g.sign[t];
    for (int u = -radius; Rational(u) * step <= remaining + slack; ++u) {
        cur[t] = g.sign[t] * u;
        enumerate_support(g, t + 1, remaining - Rational(u) * step, radius, cur, out);
    }
    cur[t] = 0;
}

std::uint64_t eval_monomial(const Monomial& m, const std::vector<std::uint64_t>& z) {
    std::uint64_t v = 1;
    for (std::size_t t = 0; t < z.size(); ++t)
        if (m[static_cast<int>(t)] != 0) v = mul(v, power(z[t], m[static_cast<int>(t)]));
    return v;
}

std::uint64_t eval_poly(const LaurentPoly& p, const std::vector<std::uint64_t>& z) {
    std::uint64_t v = 0;
    for (const auto& [m, c] : p.terms()) v = add(v, mul(reduce(c), eval_monomial(m, z)));
    return v;
}

// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<int> row_reduce(std::vector<std::vector<std::uint64_t>>& rows, int cols) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const std::uint64_t s = inv(rows[r][c]);
        for (auto& x : rows[r]) x = mul(x, s);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][c] == 0) continue;
            const std::uint64_t f = rows[k][c];
            for (std::size_t j = c; j < rows[k].size(); ++j) rows[k][j] = sub(rows[k][j], mul(f, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Basis of the solution space of the homogeneous system held in reduced rows.
std::vector<std::vector<std::uint64_t>> kernel_basis(const std::vector<std::vector<std::uint64_t>>& rows,
                                                     const std::vector<int>& pivots, int cols) {
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<std::uint64_t>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub(0, rows[r][f]);
        out.push_back(std::move(v));
    }
    return out;
}

using Dense = std::vector<std::uint64_t>;  // row-major n x n

// Solves for the structure matrices at one evaluation point when e_{i0} is not a
// cyclic vector. b_k is sought in the commutant of A subject to the linear
// conditions of a multiplicative basis. When the linear conditions leave at most
// two free parameters, associativity is imposed by linearizing the quadratic
// system in the monomials of the parameters. Entries flagged in `forced_zero`
// have no admissible support and are set to zero. Fails unless the solution is
// unique; otherwise the entries that vary are reported.
struct GeneralSolution {
    std::vector<Dense> values;               // empty when the solution is not unique
    std::vector<std::size_t> free_entries;  // entries that vary along the solution set
};

std::optional<GeneralSolution> solve_general(const Dense& a, int n, int i0, const std::vector<char>& forced_zero) {
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    auto at = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };

    // commutant: (AX - XA)_{ij} = 0 in the unknowns X_{rc}
    std::vector<std::vector<std::uint64_t>> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<std::uint64_t> row(nn, 0);
            for (int m = 0; m < n; ++m) {
                row[at(m, j)] = add(row[at(m, j)], a[at(i, m)]);
                row[at(i, m)] = sub(row[at(i, m)], a[at(m, j)]);
            }
            rows.push_back(std::move(row));
        }
    auto piv = row_reduce(rows, static_cast<int>(nn));
    const auto comm = kernel_basis(rows, piv, static_cast<int>(nn));
    const int d = static_cast<int>(comm.size());

    // unknowns x_{k,t}: b_k = sum_t x_{k,t} C_t, plus a constant column
    const int nu = n * d;
    auto var = [d](int k, int t) { return k * d + t; };
    rows.clear();
    auto entry_row = [&](int k, int i, int j, std::uint64_t scale, std::vector<std::uint64_t>& row) {
        for (int t = 0; t < d; ++t) row[var(k, t)] = add(row[var(k, t)], mul(scale, comm[t][at(i, j)]));
    };
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            std::vector<std::uint64_t> row(nu + 1, 0);
            entry_row(k, i, i0, 1, row);
            row[nu] = (i == k) ? 1 : 0;
            rows.push_back(std::move(row));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<std::uint64_t> row(nu + 1, 0);
            entry_row(i0, i, j, 1, row);
            row[nu] = (i == j) ? 1 : 0;
            rows.push_back(std::move(row));
        }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            for (int i = 0; i < n; ++i) {
                std::vector<std::uint64_t> row(nu + 1, 0);
                entry_row(j, i, k, 1, row);
                entry_row(k, i, j, kPrime - 1, row);
                rows.push_back(std::move(row));
            }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!forced_zero[k * nn + at(i, j)]) continue;
                std::vector<std::uint64_t> row(nu + 1, 0);
                entry_row(k, i, j, 1, row);
                rows.push_back(std::move(row));
            }
    // A b_j - sum_i A_ij b_i = 0
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                std::vector<std::uint64_t> row(nu + 1, 0);
                for (int m = 0; m < n; ++m)
                    if (a[at(r, m)]) entry_row(j, m, c, a[at(r, m)], row);
                for (int i = 0; i < n; ++i)
                    if (a[at(i, j)]) entry_row(i, r, c, kPrime - a[at(i, j)], row);
                bool any = false;
                for (auto x : row) any = any || x != 0;
                if (any) rows.push_back(std::move(row));
            }
    piv = row_reduce(rows, nu + 1);
    if (!piv.empty() && piv.back() == nu) return std::nullopt;  // inconsistent

    // x = x0 + sum_a s_a v_a
    std::vector<std::uint64_t> x0(nu, 0);
    for (std::size_t r = 0; r < piv.size(); ++r) x0[piv[r]] = rows[r][nu];
    std::vector<std::vector<std::uint64_t>> free_dirs;
    {
        std::vector<std::vector<std::uint64_t>> hom = rows;
        for (auto& row : hom) row.resize(nu);
        for (auto& v : kernel_basis(hom, piv, nu)) free_dirs.push_back(std::move(v));
    }
    const int np = static_cast<int>(free_dirs.size());

    // Each entry of b_k is an affine form in the parameters: coefficients [1, s_1, .., s_np].
    const int w = np + 1;
    std::vector<std::vector<std::uint64_t>> lin(static_cast<std::size_t>(n) * nn, std::vector<std::uint64_t>(w, 0));
    auto lin_at = [&](int k, int i, int j) -> std::vector<std::uint64_t>& { return lin[k * nn + at(i, j)]; };
    for (int k = 0; k < n; ++k)
        for (int t = 0; t < d; ++t)
            for (std::size_t e = 0; e < nn; ++e) {
                const std::uint64_t c = comm[t][e];
                if (!c) continue;
                auto& l = lin[k * nn + e];
                l[0] = add(l[0], mul(c, x0[var(k, t)]));
                for (int q = 0; q < np; ++q) l[q + 1] = add(l[q + 1], mul(c, free_dirs[q][var(k, t)]));
            }

    auto ambiguous = [&] {
        GeneralSolution g;
        for (std::size_t e = 0; e < lin.size(); ++e)
            for (int q = 1; q < w; ++q)
                if (lin[e][q] != 0) {
                    g.free_entries.push_back(e);
                    break;
                }
        return g;
    };
    if (np > 2) return ambiguous();

    std::vector<std::uint64_t> params(np, 0);
    if (np > 0) {
        // monomials of degree <= 2 in the parameters, indexed by (p, q) with p <= q over [1, s_1, .., s_np]
        std::vector<std::pair<int, int>> monos;
        for (int p = 0; p < w; ++p)
            for (int q = p; q < w; ++q) monos.push_back({p, q});
        const int nm = static_cast<int>(monos.size());
        std::map<std::pair<int, int>, int> mono_index;
        for (int m = 0; m < nm; ++m) mono_index[monos[m]] = m;
        auto accumulate_product = [&](const std::vector<std::uint64_t>& f, const std::vector<std::uint64_t>& g,
                                      bool negate, std::vector<std::uint64_t>& row) {
            for (int p = 0; p < w; ++p) {
                if (!f[p]) continue;
                for (int q = 0; q < w; ++q) {
                    if (!g[q]) continue;
                    const int m = mono_index[{std::min(p, q), std::max(p, q)}];
                    const std::uint64_t v = mul(f[p], g[q]);
                    row[m] = negate ? sub(row[m], v) : add(row[m], v);
                }
            }
        };
        // (b_j b_k)_{pq} - sum_i (b_k)_{ij} (b_i)_{pq} = 0
        std::vector<std::vector<std::uint64_t>> quad;
        for (int j = 0; j < n; ++j)
            for (int k = j; k < n; ++k)
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) {
                        std::vector<std::uint64_t> row(nm, 0);
                        for (int m = 0; m < n; ++m) accumulate_product(lin_at(j, p, m), lin_at(k, m, q), false, row);
                        for (int i = 0; i < n; ++i) accumulate_product(lin_at(k, i, j), lin_at(i, p, q), true, row);
                        bool any = false;
                        for (auto x : row) any = any || x != 0;
                        if (any) quad.push_back(std::move(row));
                    }
        // Put the constant monomial last so the kernel vector can be normalized on it.
        std::vector<std::vector<std::uint64_t>> reordered;
        for (auto& row : quad) {
            std::vector<std::uint64_t> r2(row.begin() + 1, row.end());
            r2.push_back(row[0]);
            reordered.push_back(std::move(r2));
        }
        auto qp = row_reduce(reordered, nm);
        if (static_cast<int>(qp.size()) == nm) return std::nullopt;
        if (static_cast<int>(qp.size()) < nm - 1) return ambiguous();
        auto ker = kernel_basis(reordered, qp, nm);
        const std::uint64_t one = ker[0][nm - 1];
        if (one == 0) return std::nullopt;
        const std::uint64_t scale = inv(one);
        for (int q = 0; q < np; ++q) params[q] = mul(ker[0][mono_index[{0, q + 1}] - 1], scale);
        for (int m = 1; m < nm; ++m) {
            const auto [p, q] = monos[m];
            const std::uint64_t lhs = mul(ker[0][m - 1], scale);
            const std::uint64_t sp = p == 0 ? 1 : params[p - 1];
            const std::uint64_t sq = q == 0 ? 1 : params[q - 1];
            if (lhs != mul(sp, sq)) return std::nullopt;
        }
    }

    GeneralSolution out;
    out.values.assign(n, Dense(nn, 0));
    for (int k = 0; k < n; ++k)
        for (std::size_t e = 0; e < nn; ++e) {
            const auto& l = lin[k * nn + e];
            std::uint64_t v = l[0];
            for (int q = 0; q < np; ++q) v = add(v, mul(l[q + 1], params[q]));
            out.values[k][e] = v;
        }
    return out;
}

struct SupportGroup {
    std::vector<Monomial> monomials;
    std::vector<std::uint64_t> vandermonde_inverse;  // |S| x |S|
};

}  // namespace

std::optional<ModularBasis> interpolate_basis(const std::vector<std::vector<LaurentPoly>>& adj, int i0, int nvars,
                                              int radius, bool allow_general,
                                              const std::vector<std::size_t>& gauge) {
    bool cyclic = true;
    const int n = static_cast<int>(adj.size());
    auto grading = find_grading(adj, i0, nvars);
    if (!grading) return std::nullopt;

    // Support of entry (i, j) of b_k: phi.beta = h(j) + h(k) - h(i).
    std::map<Rational, int> group_of_degree;
    std::vector<SupportGroup> groups;
    std::vector<int> entry_group(static_cast<std::size_t>(n) * n * n, -1);
    std::size_t max_support = 0;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational deg = grading->height[j] + grading->height[k] - grading->height[i];
                if (deg < 0 && radius == 0) continue;
                auto it = group_of_degree.find(deg);
                if (it == group_of_degree.end()) {
                    SupportGroup sg;
                    Monomial cur;
                    enumerate_support(*grading, 0, deg, radius, cur, sg.monomials);
                    if (sg.monomials.size() > 4000) return std::nullopt;
                    it = group_of_degree.emplace(deg, static_cast<int>(groups.size())).first;
                    groups.push_back(std::move(sg));
                }
                if (groups[it->second].monomials.empty()) continue;
                entry_group[(static_cast<std::size_t>(k) * n + i) * n + j] = it->second;
                max_support = std::max(max_support, groups[it->second].monomials.size());
            }

    std::mt19937_64 rng(0x5eed1234abcdULL);
    std::vector<std::uint64_t> gen(nvars);
    // nodes must be distinct inside every group for the Vandermonde systems
    for (int attempt = 0;; ++attempt) {
        if (attempt > 8) return std::nullopt;
        for (auto& g : gen) g = 2 + rng() % (kPrime - 3);
        bool ok = true;
        for (auto& sg : groups) {
            std::set<std::uint64_t> nodes;
            for (const auto& m : sg.monomials) nodes.insert(eval_monomial(m, gen));
            if (nodes.size() != sg.monomials.size() || nodes.count(0)) ok = false;
        }
        if (ok) break;
    }
    for (auto& sg : groups) {
        const int s = static_cast<int>(sg.monomials.size());
        if (s == 0) continue;
        sg.vandermonde_inverse.assign(static_cast<std::size_t>(s) * s, 0);
        for (int c = 0; c < s; ++c) {
            std::uint64_t node = eval_monomial(sg.monomials[c], gen);
            std::uint64_t p = node;
            for (int r = 0; r < s; ++r) {
                sg.vandermonde_inverse[r * s + c] = p;  // row r holds point r+1
                p = mul(p, node);
            }
        }
        if (!invert(sg.vandermonde_inverse, s)) return std::nullopt;
    }

    // Sparse adjacency terms for fast products.
    struct Nz {
        int i, j;
        LaurentPoly p;
    };
    std::vector<Nz> nz;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!adj[i][j].is_zero()) nz.push_back({i, j, adj[i][j]});

    const std::size_t nn = static_cast<std::size_t>(n) * n;
    std::vector<std::vector<std::uint64_t>> values(static_cast<std::size_t>(n) * nn);
    std::vector<std::uint64_t> z(nvars);
    for (std::size_t point = 1; point <= max_support; ++point) {
        for (int t = 0; t < nvars; ++t) z[t] = power(gen[t], static_cast<long long>(point));
        std::vector<std::pair<std::pair<int, int>, std::uint64_t>> a;
        a.reserve(nz.size());
        for (const auto& e : nz) a.push_back({{e.i, e.j}, eval_poly(e.p, z)});
        // powers X_m = A^m
        std::vector<std::vector<std::uint64_t>> pw(n, std::vector<std::uint64_t>(nn, 0));
        for (int i = 0; i < n; ++i) pw[0][i * n + i] = 1;
        for (int m = 1; m < n; ++m)
            for (const auto& [ij, v] : a) {
                const auto& prev = pw[m - 1];
                auto& cur = pw[m];
                const std::size_t ri = static_cast<std::size_t>(ij.first) * n;
                const std::size_t rj = static_cast<std::size_t>(ij.second) * n;
                for (int c = 0; c < n; ++c) cur[ri + c] = add(cur[ri + c], mul(v, prev[rj + c]));
            }
        std::vector<std::uint64_t> mi0(nn);
        for (int i = 0; i < n; ++i)
            for (int m = 0; m < n; ++m) mi0[i * n + m] = pw[m][i * n + i0];
        if (cyclic && !invert(mi0, n)) {
            if (point > 1) return std::nullopt;
            cyclic = false;
        }
        std::vector<Dense> general;
        if (!cyclic) {
            if (!allow_general) return std::nullopt;
            std::vector<char> forced_zero(entry_group.size());
            for (std::size_t e = 0; e < entry_group.size(); ++e) forced_zero[e] = entry_group[e] < 0;
            for (std::size_t e : gauge) forced_zero.at(e) = 1;
            auto sol = solve_general(pw[1], n, i0, forced_zero);
            if (!sol) return std::nullopt;
            if (sol->values.empty()) {
                ModularBasis amb;
                amb.free_entries = std::move(sol->free_entries);
                return amb;
            }
            general = std::move(sol->values);
        }
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const std::size_t e = (static_cast<std::size_t>(k) * n + i) * n + j;
                    const int gi = entry_group[e];
                    if (gi < 0 || groups[gi].monomials.size() < point) continue;
                    std::uint64_t v = 0;
                    if (cyclic) {
                        for (int m = 0; m < n; ++m) {
                            std::uint64_t c = mi0[m * n + k];
                            if (c) v = add(v, mul(c, pw[m][i * n + j]));
                        }
                    } else {
                        v = general[k][static_cast<std::size_t>(i) * n + j];
                    }
                    values[e].push_back(v);
                }
    }

    ModularBasis out;
    out.path_matrix_invertible = cyclic;
    out.basis.assign(n, std::vector<std::vector<LaurentPoly>>(n, std::vector<LaurentPoly>(n, LaurentPoly(nvars))));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const std::size_t e = (static_cast<std::size_t>(k) * n + i) * n + j;
                const int gi = entry_group[e];
                if (gi < 0) continue;
                const auto& sg = groups[gi];
                const int s = static_cast<int>(sg.monomials.size());
                LaurentPoly p(nvars);
                for (int c = 0; c < s; ++c) {
                    // y_r = sum_c x_c node_c^(r+1); coefficient = x_c
                    std::uint64_t x = 0;
                    for (int r = 0; r < s; ++r) x = add(x, mul(sg.vandermonde_inverse[c * s + r], values[e][r]));
                    if (x == 0) continue;
                    auto q = reconstruct(x);
                    if (!q) return std::nullopt;
                    p.add_term(sg.monomials[c], *q);
                }
                out.basis[k][i][j] = std::move(p);
            }
    return out;
}

}  // namespace affgraph::modp
