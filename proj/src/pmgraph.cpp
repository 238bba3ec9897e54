#include "affgraph/pmgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "affgraph/modular.hpp"

namespace affgraph {

using LMat = std::vector<std::vector<LaurentPoly>>;

int WeightedDigraph::add_vertex(const std::string& label) {
    labels_.push_back(label);
    return size() - 1;
}

void WeightedDigraph::add_edge(int src, int dst, int type, const LaurentPoly& weight) {
    if (src < 0 || src >= size() || dst < 0 || dst >= size()) throw std::out_of_range("edge endpoint out of range");
    if (weight.nvars() != nvars_) throw std::invalid_argument("edge weight has the wrong number of variables");
    if (weight.is_zero() || !weight.is_nonnegative())
        throw std::invalid_argument("edge weights must be nonzero with nonnegative coefficients");
    edges_.push_back({src, dst, type, weight});
}

int WeightedDigraph::find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

LMat WeightedDigraph::adjacency_laurent() const {
    LMat a(size(), std::vector<LaurentPoly>(size(), LaurentPoly(nvars_)));
    for (const auto& e : edges_) a[e.dst][e.src] += e.weight;
    return a;
}

FFMatrix WeightedDigraph::adjacency() const { return FFMatrix::from_laurent(adjacency_laurent(), nvars_); }

WeightedDigraph WeightedDigraph::split_monomials() const {
    WeightedDigraph g(nvars_);
    g.labels_ = labels_;
    for (const auto& e : edges_)
        for (const auto& [m, c] : e.weight.terms()) g.edges_.push_back({e.src, e.dst, e.type, LaurentPoly::monomial(nvars_, m, c)});
    return g;
}

FFMatrix path_matrix(const WeightedDigraph& g, int k) {
    const int n = g.size();
    if (k < 0 || k >= n) throw std::out_of_range("path matrix base vertex out of range");
    LMat a = g.adjacency_laurent();
    std::vector<LaurentPoly> col(n, LaurentPoly(g.nvars()));
    col[k] = LaurentPoly::constant(g.nvars(), 1);
    FFMatrix m(n, n, g.nvars());
    for (int c = 0; c < n; ++c) {
        for (int i = 0; i < n; ++i) m(i, c) = RationalFunction(col[i]);
        if (c + 1 == n) break;
        std::vector<LaurentPoly> next(n, LaurentPoly(g.nvars()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!a[i][j].is_zero() && !col[j].is_zero()) next[i] += a[i][j] * col[j];
        col = std::move(next);
    }
    return m;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::positively_multiplicative:
            return "positively_multiplicative";
        case Verdict::multiplicative_not_positive:
            return "multiplicative_not_positive";
        case Verdict::not_multiplicative:
            return "not_multiplicative";
    }
    return "unknown";
}

namespace {

struct SparseEntry {
    int i, j;
    const LaurentPoly* p;
};

std::vector<SparseEntry> sparse_entries(const LMat& a) {
    std::vector<SparseEntry> out;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        for (int j = 0; j < static_cast<int>(a.size()); ++j)
            if (!a[i][j].is_zero()) out.push_back({i, j, &a[i][j]});
    return out;
}

// Checks b_k e_{i0} = e_k, A b_k = b_k A and A b_j = sum_i A_ij b_i exactly.
// Returns an empty string on success, a description otherwise.
std::string verify_basis(const LMat& a, int i0, const std::vector<LMat>& b, int nvars) {
    const int n = static_cast<int>(a.size());
    const auto nz = sparse_entries(a);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            const LaurentPoly& v = b[k][i][i0];
            if (i == k ? !v.is_one() : !v.is_zero())
                return "b_" + std::to_string(k) + " does not send the base vertex to e_" + std::to_string(k);
        }
        LMat left(n, std::vector<LaurentPoly>(n, LaurentPoly(nvars)));
        LMat right = left;
        for (const auto& e : nz)
            for (int c = 0; c < n; ++c) {
                if (!b[k][e.j][c].is_zero()) left[e.i][c] += *e.p * b[k][e.j][c];
                if (!b[k][c][e.i].is_zero()) right[c][e.j] += b[k][c][e.i] * *e.p;
            }
        if (left != right) return "b_" + std::to_string(k) + " does not commute with A";
    }
    for (int j = 0; j < n; ++j) {
        LMat lhs(n, std::vector<LaurentPoly>(n, LaurentPoly(nvars)));
        LMat rhs = lhs;
        for (const auto& e : nz) {
            for (int c = 0; c < n; ++c)
                if (!b[j][e.j][c].is_zero()) lhs[e.i][c] += *e.p * b[j][e.j][c];
            if (e.j == j)
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        if (!b[e.i][r][c].is_zero()) rhs[r][c] += *e.p * b[e.i][r][c];
        }
        if (lhs != rhs) return "A b_" + std::to_string(j) + " is not the adjacency column";
    }
    return {};
}

// Checks the conditions that do not follow from cyclicity of e_{i0}: symmetric
// structure constants, b_{i0} = 1 and associativity.
std::string verify_algebra(int i0, const std::vector<LMat>& b, int nvars) {
    const int n = static_cast<int>(b.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j ? !b[i0][i][j].is_one() : !b[i0][i][j].is_zero()) return "b at the base vertex is not the unit";
            for (int k = j + 1; k < n; ++k)
                if (b[j][i][k] != b[k][i][j]) return "structure constants are not symmetric";
        }
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            LMat lhs(n, std::vector<LaurentPoly>(n, LaurentPoly(nvars)));
            LMat rhs = lhs;
            for (int p = 0; p < n; ++p)
                for (int m = 0; m < n; ++m) {
                    if (b[j][p][m].is_zero()) continue;
                    for (int q = 0; q < n; ++q)
                        if (!b[k][m][q].is_zero()) lhs[p][q] += b[j][p][m] * b[k][m][q];
                }
            for (int i = 0; i < n; ++i) {
                const LaurentPoly& c = b[j][i][k];
                if (c.is_zero()) continue;
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        if (!b[i][p][q].is_zero()) rhs[p][q] += c * b[i][p][q];
            }
            if (lhs != rhs) return "product b_" + std::to_string(j) + " b_" + std::to_string(k) + " is not associative";
        }
    return {};
}

void finish_from_laurent(PMCertificate& cert, const LMat& a, const std::vector<LMat>& b, int nvars,
                         int minpoly_degree) {
    const int n = static_cast<int>(a.size());
    cert.minimal_polynomial_degree = minpoly_degree;
    cert.basis.clear();
    for (int k = 0; k < n; ++k) cert.basis.push_back(FFMatrix::from_laurent(b[k], nvars));
    cert.verdict = Verdict::positively_multiplicative;
    for (int j = 0; j < n && cert.offending[0] < 0; ++j)
        for (int i = 0; i < n && cert.offending[0] < 0; ++i)
            for (int k = 0; k < n; ++k)
                if (!b[j][i][k].is_nonnegative()) {
                    cert.verdict = Verdict::multiplicative_not_positive;
                    cert.offending = {j, k, i};
                    cert.reason = "negative coefficient in a structure constant";
                    break;
                }
}

bool all_nonnegative(const std::vector<LMat>& b) {
    for (const auto& m : b)
        for (const auto& row : m)
            for (const auto& p : row)
                if (!p.is_nonnegative()) return false;
    return true;
}

// Without a cyclic base vector the conditions on b_k may leave a family of
// solutions. Members are singled out by forcing up to two varying entries to
// vanish; the first verified positive basis wins, otherwise the first verified one.
std::optional<std::vector<LMat>> search_noncyclic_basis(const LMat& a, int i0, int nvars) {
    constexpr std::size_t kMaxTries = 48;
    std::optional<std::vector<LMat>> fallback;
    auto accept = [&](const modp::ModularBasis& cand) {
        if (!verify_basis(a, i0, cand.basis, nvars).empty() || !verify_algebra(i0, cand.basis, nvars).empty())
            return false;
        if (all_nonnegative(cand.basis)) return true;
        if (!fallback) fallback = cand.basis;
        return false;
    };
    for (int radius : {0, 1, 2, 4}) {
        auto cand = modp::interpolate_basis(a, i0, nvars, radius, true);
        if (!cand) continue;
        if (!cand->basis.empty()) {
            if (accept(*cand)) return cand->basis;
            continue;
        }
        const auto first = cand->free_entries;
        for (std::size_t x = 0; x < first.size() && x < kMaxTries; ++x) {
            auto c1 = modp::interpolate_basis(a, i0, nvars, radius, true, {first[x]});
            if (!c1) continue;
            if (!c1->basis.empty()) {
                if (accept(*c1)) return c1->basis;
                continue;
            }
            const auto second = c1->free_entries;
            for (std::size_t y = 0; y < second.size() && y < kMaxTries; ++y) {
                auto c2 = modp::interpolate_basis(a, i0, nvars, radius, true, {first[x], second[y]});
                if (c2 && !c2->basis.empty() && accept(*c2)) return c2->basis;
            }
        }
    }
    return fallback;
}

}  // namespace

PMCertificate multiplicative_basis_at(const WeightedDigraph& g, int i0, const CertificateOptions& opts) {
    const int n = g.size();
    if (i0 < 0 || i0 >= n) throw std::out_of_range("base vertex out of range");
    PMCertificate cert;
    cert.base = i0;
    const LMat a = g.adjacency_laurent();

    if (opts.allow_interpolation && g.nvars() > 0) {
        for (int radius : {0, 1, 2, 4}) {
            auto cand = modp::interpolate_basis(a, i0, g.nvars(), radius);
            if (!cand || !cand->path_matrix_invertible || cand->basis.empty()) continue;
            if (verify_basis(a, i0, cand->basis, g.nvars()).empty()) {
                cert.used_interpolation = true;
                finish_from_laurent(cert, a, cand->basis, g.nvars(), n);
                return cert;
            }
        }
    }

    const FFMatrix m = path_matrix(g, i0);
    InverseResult inv = mat_inverse(m);
    if (!inv.invertible) {
        cert.verdict = Verdict::not_multiplicative;
        cert.kernel = inv.kernel;
        const int deg = static_cast<int>(minimal_polynomial(g.adjacency()).size()) - 1;
        cert.minimal_polynomial_degree = deg;
        if (deg == n) {
            // any multiplicative algebra would contain A and so have dimension n
            cert.reason = "path matrix is singular";
            return cert;
        }
        if (opts.allow_interpolation && g.nvars() > 0) {
            if (auto found = search_noncyclic_basis(a, i0, g.nvars())) {
                cert.used_interpolation = true;
                cert.kernel.clear();
                finish_from_laurent(cert, a, *found, g.nvars(), deg);
                if (cert.verdict == Verdict::multiplicative_not_positive) {
                    cert.conclusive = false;
                    cert.reason = "only a basis with a negative structure constant was found";
                }
                return cert;
            }
        }
        cert.conclusive = false;
        cert.reason = "path matrix is singular and the adjacency matrix is not cyclic; no basis found";
        return cert;
    }
    std::vector<FFMatrix> basis;
    for (int k = 0; k < n; ++k) basis.push_back(k == i0 ? FFMatrix::identity(n, g.nvars()) : path_matrix(g, k) * inv.inverse);

    std::vector<LMat> lb(n, LMat(n, std::vector<LaurentPoly>(n)));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                auto p = basis[j](i, k).as_laurent();
                if (!p) {
                    cert.verdict = Verdict::multiplicative_not_positive;
                    cert.minimal_polynomial_degree = n;
                    cert.offending = {j, k, i};
                    cert.reason = "structure constant is not a Laurent polynomial";
                    cert.basis = std::move(basis);
                    return cert;
                }
                lb[j][i][k] = std::move(*p);
            }
    if (auto err = verify_basis(a, i0, lb, g.nvars()); !err.empty()) throw std::logic_error("basis check failed: " + err);
    finish_from_laurent(cert, a, lb, g.nvars(), n);
    return cert;
}

Expansion expand(const WeightedDigraph& g, int root, int depth) {
    if (root < 0 || root >= g.size()) throw std::out_of_range("expansion root out of range");
    for (const auto& e : g.edges())
        if (!e.weight.is_monomial())
            throw std::invalid_argument("expansion needs monomial weights; call split_monomials first");
    Expansion ex;
    ex.graph = WeightedDigraph(0);
    if (depth < 1) return ex;
    std::map<std::tuple<int, Monomial, int>, int> index;
    auto node_label = [&](int v, const Monomial& m, int level) {
        std::string s = g.label(v) + "|";
        auto exps = m.to_vector(g.nvars());
        for (std::size_t t = 0; t < exps.size(); ++t) s += (t ? "," : "") + std::to_string(exps[t]);
        return s + "|" + std::to_string(level);
    };
    auto get = [&](int v, const Monomial& m, int level) {
        auto key = std::make_tuple(v, m, level);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = ex.graph.add_vertex(node_label(v, m, level));
        ex.nodes.push_back({v, m, level});
        index.emplace(key, id);
        return id;
    };
    std::vector<int> frontier{get(root, Monomial{}, 1)};
    for (int level = 1; level < depth; ++level) {
        std::map<std::tuple<int, int, int>, Rational> arrows;
        std::vector<int> next;
        for (int id : frontier) {
            const ExpansionNode node = ex.nodes[id];
            for (const auto& e : g.edges()) {
                if (e.src != node.vertex) continue;
                const auto& [m, c] = e.weight.terms().front();
                std::size_t before = ex.nodes.size();
                int child = get(e.dst, node.shift + m, level + 1);
                if (ex.nodes.size() != before) next.push_back(child);
                arrows[{id, child, e.type}] += c;
            }
        }
        for (const auto& [key, c] : arrows) {
            const auto& [src, dst, type] = key;
            ex.graph.add_edge(src, dst, type, LaurentPoly::constant(0, c));
        }
        frontier = std::move(next);
    }
    return ex;
}

namespace {

using EdgeKeys = std::map<std::pair<int, int>, std::vector<std::string>>;

EdgeKeys edge_keys(const WeightedDigraph& g, const IsoOptions& opts) {
    EdgeKeys keys;
    for (const auto& e : g.edges()) {
        std::string k = opts.respect_types ? std::to_string(e.type) : std::string();
        k += '|';
        if (opts.respect_weights) k += e.weight.to_string();
        keys[{e.src, e.dst}].push_back(k);
    }
    for (auto& [p, v] : keys) std::sort(v.begin(), v.end());
    return keys;
}

std::vector<std::string> signatures(const WeightedDigraph& g, const EdgeKeys& keys) {
    std::vector<std::vector<std::string>> out_k(g.size()), in_k(g.size());
    for (const auto& [p, v] : keys)
        for (const auto& k : v) {
            out_k[p.first].push_back(p.first == p.second ? "loop" + k : k);
            in_k[p.second].push_back(k);
        }
    std::vector<std::string> sig(g.size());
    for (int v = 0; v < g.size(); ++v) {
        std::sort(out_k[v].begin(), out_k[v].end());
        std::sort(in_k[v].begin(), in_k[v].end());
        std::string s = "o";
        for (const auto& k : out_k[v]) s += k + ";";
        s += "i";
        for (const auto& k : in_k[v]) s += k + ";";
        sig[v] = s;
    }
    return sig;
}

}  // namespace

IsoResult typed_isomorphic(const WeightedDigraph& a, const WeightedDigraph& b, const IsoOptions& opts) {
    IsoResult res;
    const int n = a.size();
    if (n != b.size() || a.edges().size() != b.edges().size()) return res;
    const EdgeKeys ka = edge_keys(a, opts), kb = edge_keys(b, opts);
    const auto sa = signatures(a, ka), sb = signatures(b, kb);
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return res;
    }
    // visit vertices of a in BFS order of the underlying undirected graph
    std::vector<std::vector<int>> nbr(n);
    for (const auto& [p, v] : ka) {
        nbr[p.first].push_back(p.second);
        nbr[p.second].push_back(p.first);
    }
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        order.push_back(s);
        for (std::size_t q = order.size() - 1; q < order.size(); ++q)
            for (int w : nbr[order[q]])
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
    }
    static const std::vector<std::string> kNone;
    auto keys_of = [](const EdgeKeys& k, int u, int v) -> const std::vector<std::string>& {
        auto it = k.find({u, v});
        return it == k.end() ? kNone : it->second;
    };
    std::vector<int> map(n, -1), used(n, 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        const int v = order[pos];
        for (int c = 0; c < n; ++c) {
            if (used[c] || sa[v] != sb[c]) continue;
            map[v] = c;
            bool ok = keys_of(ka, v, v) == keys_of(kb, c, c);
            for (std::size_t q = 0; q < pos && ok; ++q) {
                const int u = order[q];
                ok = keys_of(ka, v, u) == keys_of(kb, c, map[u]) && keys_of(ka, u, v) == keys_of(kb, map[u], c);
            }
            if (ok) {
                used[c] = 1;
                if (rec(pos + 1)) return true;
                used[c] = 0;
            }
            map[v] = -1;
        }
        return false;
    };
    if (rec(0)) {
        res.isomorphic = true;
        res.mapping = map;
    }
    return res;
}

WeightedDigraph dihedral_automaton(long a, long b, long c, long d) {
    WeightedDigraph g(0);
    for (int i = 1; i <= 3; ++i) g.add_vertex("v" + std::to_string(i));
    g.add_edge(0, 1, 1, LaurentPoly::constant(0, Rational(a)));
    g.add_edge(0, 2, 0, LaurentPoly::constant(0, Rational(b)));
    g.add_edge(2, 1, 1, LaurentPoly::constant(0, Rational(d)));
    g.add_edge(1, 2, 0, LaurentPoly::constant(0, Rational(c)));
    return g;
}

}  // namespace affgraph
