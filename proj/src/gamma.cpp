#include "affgraph/gamma.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace affgraph {

std::string kind_name(GammaKind k) {
    switch (k) {
        case GammaKind::rho:
            return "rho";
        case GammaKind::gamma:
            return "gamma";
        case GammaKind::B0:
            return "B0";
        case GammaKind::fundamental_domain:
            return "fundamental_domain";
        case GammaKind::WJ_geometric:
            return "WJ_geometric";
        case GammaKind::grassmannian_truncation:
            return "grassmannian_truncation";
    }
    return "unknown";
}

int GammaGraph::vertex_of(const AffineElement& w) const {
    auto it = std::find(elements.begin(), elements.end(), w);
    return it == elements.end() ? -1 : static_cast<int>(it - elements.begin());
}

namespace {

std::vector<int> normalized_jprime(const AffineCartanData& d, std::vector<int> jprime) {
    std::sort(jprime.begin(), jprime.end());
    jprime.erase(std::unique(jprime.begin(), jprime.end()), jprime.end());
    for (int j : jprime)
        if (j < 1 || j > d.rank) throw std::invalid_argument("J' must be a subset of {1..n}");
    return jprime;
}

std::vector<int> all_finite_nodes(const AffineCartanData& d) {
    std::vector<int> v(d.rank);
    std::iota(v.begin(), v.end(), 1);
    return v;
}

std::string omega_string(const IntVec& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        if (w[i] < 0)
            s += "-";
        else if (!s.empty())
            s += "+";
        if (w[i] != 1 && w[i] != -1) s += std::to_string(w[i] < 0 ? -w[i] : w[i]);
        s += "omega" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

LaurentPoly weighted_monomial(const IntVec& exps, long long coef) {
    std::vector<int> e(exps.begin(), exps.end());
    return LaurentPoly::monomial(e, Rational(static_cast<long>(coef)));
}

// Vertices ordered by (length, reduced word).
struct OrderedFinite {
    std::vector<WeylElement> elems;
    std::map<WeylElement, int> index;
};

OrderedFinite order_finite(const AffineCartanData& d, const std::vector<WeylElement>& xs) {
    std::vector<std::pair<std::pair<int, Word>, WeylElement>> keyed;
    for (const auto& x : xs) keyed.push_back({{length(d, x), reduced_word(d, x)}, x});
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    OrderedFinite o;
    for (auto& [k, x] : keyed) {
        o.index.emplace(x, static_cast<int>(o.elems.size()));
        o.elems.push_back(x);
    }
    return o;
}

void add_finite_vertices(const AffineCartanData& d, GammaGraph& g, const OrderedFinite& o) {
    for (const auto& x : o.elems) {
        std::string w = word_string(reduced_word(d, x));
        g.graph.add_vertex(w);
        g.words.push_back(w);
        g.elements.push_back(finite_part(d, x));
    }
}

std::vector<std::string> coroot_legend(const std::vector<int>& jprime, bool quotient) {
    std::vector<std::string> legend;
    for (int j : jprime) {
        std::string a = "alpha" + std::to_string(j) + "^vee";
        legend.push_back(quotient ? "class(" + a + ")" : a);
    }
    return legend;
}

GammaGraph combinatorial_graph(const AffineCartanData& d, const std::vector<int>& jprime, GammaKind kind) {
    const std::vector<int> J = complement(d, jprime);
    GammaGraph g;
    g.kind = kind;
    g.jprime = jprime;
    g.legend = coroot_legend(jprime, kind == GammaKind::gamma);
    g.graph = WeightedDigraph(static_cast<int>(jprime.size()));
    const OrderedFinite o = order_finite(d, enumerate_WJ(d, J));
    add_finite_vertices(d, g, o);
    const WeylElement s_theta = reflection(d, d.theta_index);
    const int nv = static_cast<int>(jprime.size());
    for (int v = 0; v < static_cast<int>(o.elems.size()); ++v) {
        const WeylElement& w = o.elems[v];
        const int lw = length(d, w);
        const WeylElement y = min_coset_rep(d, multiply(d, s_theta, w), J);
        if (length(d, y) < lw) {
            IntVec wt = apply_coroot(d, inverse(w), d.theta_coroot);
            g.graph.add_edge(v, o.index.at(y), 0, weighted_monomial(coroot_class(d, wt, J), d.marks[0]));
        }
        for (int i = 1; i <= d.rank; ++i) {
            WeylElement x = multiply(d, simple_reflection(d, i), w);
            if (!in_WJ(x, J) || length(d, x) != lw + 1) continue;
            g.graph.add_edge(v, o.index.at(x), i, LaurentPoly::constant(nv, Rational(static_cast<long>(d.marks[i]))));
        }
    }
    return g;
}

Rational integer_determinant(const IntMat& m) {
    const int n = static_cast<int>(m.size());
    RatMat a(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m[i][j]));
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

struct OrderedAffine {
    std::vector<AffineElement> elems;
    std::map<AffineElement, int> index;
};

OrderedAffine order_affine(const AffineCartanData& d, const std::vector<AffineElement>& xs) {
    std::vector<std::pair<std::pair<int, Word>, AffineElement>> keyed;
    for (const auto& x : xs) keyed.push_back({{length_affine(d, x), aff_reduced_word(d, x)}, x});
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    OrderedAffine o;
    for (auto& [k, x] : keyed) {
        if (!o.index.emplace(x, static_cast<int>(o.elems.size())).second)
            throw std::invalid_argument("domain lists the alcove " + word_string(k.second) + " twice");
        o.elems.push_back(x);
    }
    return o;
}

void add_affine_vertices(const AffineCartanData& d, GammaGraph& g, const OrderedAffine& o) {
    for (const auto& x : o.elems) {
        std::string w = aff_word_string(d, x);
        g.graph.add_vertex(w);
        g.words.push_back(w);
        g.elements.push_back(x);
    }
}

IntVec unit_omega(int n, int i, long long c) {
    IntVec v(n, 0);
    v[i] = c;
    return v;
}

// Locates an alcove relative to an L-fundamental domain through sample points:
// x = u * t_gamma exactly when Q_x - Q_u = scale * gamma.
class DomainLocator {
public:
    DomainLocator(const AffineCartanData& d, const IntMat& lattice, const std::vector<AffineElement>& domain)
        : d_(d), lattice_inv_(rational_inverse(lattice)) {
        for (const auto& u : domain) points_.push_back(sample_image(d, u));
    }

    struct Hit {
        int member;
        IntVec lattice_coords;
    };

    std::vector<Hit> locate(const AffineElement& x) const {
        const ScaledPoint q = sample_image(d_, x);
        std::vector<Hit> hits;
        const int n = d_.rank;
        for (int m = 0; m < static_cast<int>(points_.size()); ++m) {
            IntVec gamma(n);
            bool ok = true;
            for (int j = 0; j < n && ok; ++j) {
                long long diff = q.coords[j] - points_[m].coords[j];
                ok = diff % q.scale == 0;
                gamma[j] = diff / q.scale;
            }
            if (!ok) continue;
            IntVec c(n);
            for (int k = 0; k < n && ok; ++k) {
                Rational s = 0;
                for (int j = 0; j < n; ++j) s += Rational(static_cast<long>(gamma[j])) * lattice_inv_[j][k];
                ok = s.get_den() == 1;
                if (ok) c[k] = s.get_num().get_si();
            }
            if (ok) hits.push_back({m, c});
        }
        return hits;
    }

private:
    const AffineCartanData& d_;
    RatMat lattice_inv_;
    std::vector<ScaledPoint> points_;
};

}  // namespace

GammaGraph build_gamma_rho(const AffineCartanData& d) {
    return combinatorial_graph(d, all_finite_nodes(d), GammaKind::rho);
}

GammaGraph build_gamma_gamma(const AffineCartanData& d, const std::vector<int>& jprime) {
    if (jprime.empty()) throw std::invalid_argument("J' must be nonempty");
    return combinatorial_graph(d, normalized_jprime(d, jprime), GammaKind::gamma);
}

std::vector<AffineElement> compute_B0(const AffineCartanData& d) {
    const int n = d.rank;
    const long long max_mark = *std::max_element(d.marks.begin(), d.marks.end());
    const int cutoff = static_cast<int>(d.num_positive() * max_mark) + 2 * (n + 1);
    std::vector<AffineElement> out;
    for (const auto& w : enumerate_grassmannians_up_to(d, cutoff)) {
        bool stuck = true;
        for (int i = 0; i < n && stuck; ++i) stuck = !is_grassmannian(d, star_translate(d, w, unit_omega(n, i, -1)));
        if (stuck) out.push_back(w);
    }
    const Rational index = integer_determinant(d.finite_cartan);
    const Rational expected = Rational(static_cast<long>(enumerate_group(d).size())) / abs(index);
    if (Rational(static_cast<long>(out.size())) != expected)
        throw std::logic_error("B0 search found " + std::to_string(out.size()) + " elements, expected " +
                               expected.get_str());
    return out;
}

GammaGraph build_gamma_B0(const AffineCartanData& d) {
    const int n = d.rank;
    GammaGraph g;
    g.kind = GammaKind::B0;
    g.graph = WeightedDigraph(n);
    for (int i = 0; i < n; ++i) {
        g.lattice.push_back(unit_omega(n, i, 1));
        g.legend.push_back("omega" + std::to_string(i + 1));
    }
    const OrderedAffine o = order_affine(d, compute_B0(d));
    add_affine_vertices(d, g, o);
    for (int v = 0; v < static_cast<int>(o.elems.size()); ++v) {
        for (int i = 0; i <= n; ++i) {
            if (crossing_sign(d, o.elems[v], i) != Crossing::positive) continue;
            AffineElement x = aff_multiply(d, aff_generator(d, i), o.elems[v]);
            IntVec kappa(n, 0);
            for (bool moved = true; moved;) {
                moved = false;
                for (int j = 0; j < n && !moved; ++j) {
                    AffineElement y = star_translate(d, x, unit_omega(n, j, -1));
                    if (is_grassmannian(d, y)) {
                        x = y;
                        ++kappa[j];
                        moved = true;
                    }
                }
            }
            g.graph.add_edge(v, o.index.at(x), i, weighted_monomial(kappa, d.marks[i]));
        }
    }
    return g;
}

GammaGraph build_gamma_fundamental(const AffineCartanData& d, const std::vector<GeoWeight>& lattice_basis,
                                   const std::vector<AffineElement>& domain) {
    const int n = d.rank;
    if (static_cast<int>(lattice_basis.size()) != n) throw std::invalid_argument("lattice basis must have rank n");
    IntMat lattice;
    for (const auto& b : lattice_basis) {
        if (static_cast<int>(b.coords.size()) != n) throw std::invalid_argument("lattice vector of the wrong size");
        IntVec row;
        for (const auto& c : b.coords) {
            if (c.get_den() != 1) throw std::invalid_argument("lattice vectors must lie in P");
            row.push_back(c.get_num().get_si());
        }
        lattice.push_back(row);
    }
    if (integer_determinant(lattice) == 0) throw std::invalid_argument("lattice basis is degenerate");
    if (std::find(domain.begin(), domain.end(), aff_identity(d)) == domain.end())
        throw std::invalid_argument("domain must contain the fundamental alcove");

    GammaGraph g;
    g.kind = GammaKind::fundamental_domain;
    g.graph = WeightedDigraph(n);
    g.lattice = lattice;
    for (const auto& row : lattice) g.legend.push_back(omega_string(row));
    const OrderedAffine o = order_affine(d, domain);
    add_affine_vertices(d, g, o);
    const DomainLocator locator(d, lattice, o.elems);

    long long bound = 0;
    for (const auto& u : o.elems)
        for (long long k : alcove_coordinates(d, u)) bound = std::max(bound, k < 0 ? -k - 1 : k);
    for (const auto& x : enumerate_window(d, bound + 2)) {
        const auto hits = locator.locate(x);
        if (hits.size() != 1)
            throw std::invalid_argument("not a fundamental domain: alcove " + aff_word_string(d, x) + " has " +
                                        std::to_string(hits.size()) + " representatives");
    }

    for (int v = 0; v < static_cast<int>(o.elems.size()); ++v)
        for (int i = 0; i <= n; ++i) {
            if (crossing_sign(d, o.elems[v], i) != Crossing::positive) continue;
            const auto hits = locator.locate(aff_multiply(d, aff_generator(d, i), o.elems[v]));
            g.graph.add_edge(v, hits.front().member, i, weighted_monomial(hits.front().lattice_coords, d.marks[i]));
        }
    return g;
}

GammaGraph build_gamma_WJ_geometric(const AffineCartanData& d, const std::vector<int>& jprime_in) {
    const std::vector<int> jprime = normalized_jprime(d, jprime_in);
    const std::vector<int> J = complement(d, jprime);
    GammaGraph g;
    g.kind = GammaKind::WJ_geometric;
    g.jprime = jprime;
    g.legend = coroot_legend(jprime, !J.empty());
    g.graph = WeightedDigraph(static_cast<int>(jprime.size()));
    const OrderedFinite o = order_finite(d, enumerate_WJ(d, J));
    add_finite_vertices(d, g, o);
    for (int v = 0; v < static_cast<int>(o.elems.size()); ++v) {
        const AffineElement w = g.elements[v];
        for (int i = 0; i <= d.rank; ++i) {
            if (crossing_sign(d, w, i) != Crossing::positive) continue;
            AffineElement x = aff_multiply(d, aff_generator(d, i), w);
            if (!in_J_alcove(d, x, J)) continue;
            const UJFactor f = uj_decompose(d, x, J);
            g.graph.add_edge(v, o.index.at(f.u), i, weighted_monomial(f.cls, d.marks[i]));
        }
    }
    return g;
}

std::vector<std::vector<LaurentPoly>> multiplication_matrix(const GammaGraph& g) { return g.graph.adjacency_laurent(); }

GammaGraph build_grassmannian_truncation(const AffineCartanData& d, int max_length) {
    GammaGraph g;
    g.kind = GammaKind::grassmannian_truncation;
    g.graph = WeightedDigraph(0);
    const OrderedAffine o = order_affine(d, enumerate_grassmannians_up_to(d, max_length));
    add_affine_vertices(d, g, o);
    for (int v = 0; v < static_cast<int>(o.elems.size()); ++v) {
        const int l = length_affine(d, o.elems[v]);
        for (int i = 0; i <= d.rank; ++i) {
            auto it = o.index.find(aff_multiply(d, aff_generator(d, i), o.elems[v]));
            if (it == o.index.end() || length_affine(d, it->first) != l + 1) continue;
            g.graph.add_edge(v, it->second, i, LaurentPoly::constant(0, Rational(static_cast<long>(d.marks[i]))));
        }
    }
    return g;
}

ExpansionReport verify_expansion(const AffineCartanData& d, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be positive");
    const GammaGraph b0 = build_gamma_B0(d);
    const Expansion ex = expand(b0.graph.split_monomials(), 0, depth);
    const GammaGraph weak = build_grassmannian_truncation(d, depth - 1);
    ExpansionReport r;
    r.level_sizes.assign(depth, 0);
    for (const auto& node : ex.nodes) ++r.level_sizes[node.level - 1];
    r.isomorphic = typed_isomorphic(ex.graph, weak.graph, IsoOptions{false, true}).isomorphic;

    // node (v, z^beta) is the alcove of v moved by beta
    std::vector<int> image(ex.nodes.size(), -1);
    std::vector<char> hit(weak.graph.size(), 0);
    for (std::size_t k = 0; k < ex.nodes.size(); ++k) {
        const auto& node = ex.nodes[k];
        const auto beta = node.shift.to_vector(d.rank);
        const AffineElement x = star_translate(d, b0.elements[node.vertex], IntVec(beta.begin(), beta.end()));
        image[k] = weak.vertex_of(x);
        if (image[k] < 0 || hit[image[k]] || length_affine(d, x) != node.level - 1) {
            r.detail = "node " + ex.graph.label(static_cast<int>(k)) + " maps to " + aff_word_string(d, x);
            return r;
        }
        hit[image[k]] = 1;
    }
    if (ex.nodes.size() != static_cast<std::size_t>(weak.graph.size())) {
        r.detail = "vertex counts differ";
        return r;
    }
    auto total = [](const WeightedDigraph& g, int s, int t) {
        LaurentPoly w(0);
        for (const auto& e : g.edges())
            if (e.src == s && e.dst == t) w += e.weight;
        return w;
    };
    for (int s = 0; s < ex.graph.size(); ++s)
        for (int t = 0; t < ex.graph.size(); ++t)
            if (total(ex.graph, s, t) != total(weak.graph, image[s], image[t])) {
                r.detail = "arrow " + ex.graph.label(s) + " -> " + ex.graph.label(t) + " differs";
                return r;
            }
    r.identified = true;
    return r;
}

std::vector<std::vector<LaurentPoly>> bar_transpose(const std::vector<std::vector<LaurentPoly>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<LaurentPoly>> t(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("bar_transpose needs a square matrix");
        for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j].bar();
    }
    return t;
}

MainTheoremReport verify_main_theorem(const AffineCartanData& d, const std::vector<int>& jprime,
                                      bool run_certificate) {
    const GammaGraph comb = jprime.empty() ? build_gamma_rho(d) : build_gamma_gamma(d, jprime);
    const GammaGraph geo = build_gamma_WJ_geometric(d, jprime.empty() ? all_finite_nodes(d) : jprime);
    MainTheoremReport r;
    r.vertices = comb.graph.size();
    if (comb.elements != geo.elements) {
        r.mismatch_detail = "vertex sets differ";
        return r;
    }
    const auto lhs = multiplication_matrix(geo);
    const auto rhs = bar_transpose(comb.graph.adjacency_laurent());
    r.identity_holds = true;
    for (int i = 0; i < r.vertices && r.identity_holds; ++i)
        for (int j = 0; j < r.vertices; ++j)
            if (lhs[i][j] != rhs[i][j]) {
                r.identity_holds = false;
                r.first_mismatch = std::make_pair(i, j);
                r.mismatch_detail = "entry (" + comb.words[i] + ", " + comb.words[j] + "): geometric " +
                                    lhs[i][j].to_string() + ", combinatorial " + rhs[i][j].to_string();
                break;
            }
    if (run_certificate) {
        const PMCertificate cert = multiplicative_basis_at(geo.graph, 0);
        r.certificate_run = true;
        r.verdict = cert.verdict;
        r.minimal_polynomial_degree = cert.minimal_polynomial_degree;
    }
    return r;
}

PieriReport verify_pieri(const AffineCartanData& d, int max_length) {
    if (max_length < 1) throw std::invalid_argument("max_length must be positive");
    PieriReport r;
    for (const auto& w : enumerate_grassmannians_up_to(d, max_length)) {
        const int l = length_affine(d, w);
        std::vector<int> order, geometric;
        for (int i = 0; i <= d.rank; ++i) {
            AffineElement x = aff_multiply(d, aff_generator(d, i), w);
            if (length_affine(d, x) == l + 1 && is_grassmannian(d, x)) order.push_back(i);
            if (crossing_sign(d, w, i) == Crossing::positive) geometric.push_back(i);
        }
        ++r.checked;
        if (order != geometric) r.mismatches.push_back(aff_word_string(d, w));
    }
    return r;
}

UJReport verify_UJ(const AffineCartanData& d, const std::vector<int>& jprime_in, long long bound) {
    const std::vector<int> jprime = normalized_jprime(d, jprime_in);
    const std::vector<int> J = complement(d, jprime);
    UJReport r;
    auto in_window = [&](const AffineElement& x) {
        for (long long k : alcove_coordinates(d, x))
            if (k > bound || -k > bound) return false;
        return true;
    };
    std::set<AffineElement> alcoves;
    for (const auto& x : enumerate_window(d, bound))
        if (in_J_alcove(d, x, J)) alcoves.insert(x);
    r.alcoves = static_cast<int>(alcoves.size());

    std::map<std::pair<WeylElement, IntVec>, AffineElement> pairs;
    bool ok = true;
    for (const auto& x : alcoves) {
        const UJFactor f = uj_decompose(d, x, J);
        if (!in_WJ(f.u, J) || !(bullet_translate(d, finite_part(d, f.u), f.cls, J) == x) ||
            !pairs.emplace(std::make_pair(f.u, f.cls), x).second) {
            ok = false;
            r.detail = "alcove " + aff_word_string(d, x) + " is not recovered from its factorization";
            break;
        }
    }
    // every pair whose image lies in the window is one of the decompositions
    const long long reach = 2 * bound + 2;
    const int m = static_cast<int>(jprime.size());
    for (const auto& u : enumerate_WJ(d, J)) {
        if (!ok) break;
        IntVec cls(m, -reach);
        while (ok) {
            const AffineElement x = bullet_translate(d, finite_part(d, u), cls, J);
            if (in_window(x) && !pairs.count({u, cls})) {
                ok = false;
                r.detail = "pair (" + word_string(reduced_word(d, u)) + ", class) maps into the window but was missed";
            }
            int k = 0;
            while (k < m && cls[k] == reach) cls[k++] = -reach;
            if (k == m) break;
            ++cls[k];
        }
    }
    r.bijective = ok;

    bool inv = true;
    for (const auto& x : alcoves) {
        if (!inv) break;
        const UJFactor fx = uj_decompose(d, x, J);
        for (int i = 0; i <= d.rank && inv; ++i) {
            const AffineElement y = aff_multiply(d, aff_generator(d, i), x);
            if (!in_J_alcove(d, y, J)) continue;
            const UJFactor fy = uj_decompose(d, y, J);
            const Crossing sign = crossing_sign(d, x, i);
            for (int k = 0; k < m && inv; ++k)
                for (long long step : {-1LL, 1LL}) {
                    IntVec cx = fx.cls, cy = fy.cls;
                    cx[k] += step;
                    cy[k] += step;
                    const AffineElement x2 = bullet_translate(d, finite_part(d, fx.u), cx, J);
                    const AffineElement y2 = bullet_translate(d, finite_part(d, fy.u), cy, J);
                    ++r.crossings_checked;
                    if (!(aff_multiply(d, aff_generator(d, i), x2) == y2) || crossing_sign(d, x2, i) != sign) {
                        inv = false;
                        r.detail = "crossing of type " + std::to_string(i) + " at " + aff_word_string(d, x) +
                                   " changes under translation";
                        break;
                    }
                }
        }
    }
    r.crossings_invariant = inv;
    return r;
}

namespace {

// reverse[v][i] = source of the type-i arrow ending at v, or -1.
std::vector<std::vector<int>> reversed_transitions(const AffineCartanData& d, const std::vector<int>& jprime) {
    const GammaGraph g = jprime.empty() ? build_gamma_rho(d) : build_gamma_gamma(d, jprime);
    std::vector<std::vector<int>> rev(g.graph.size(), std::vector<int>(d.rank + 1, -1));
    for (const auto& e : g.graph.edges()) {
        int& slot = rev[e.dst][e.type];
        if (slot >= 0) throw std::logic_error("two arrows of one type end at the same vertex");
        slot = e.src;
    }
    return rev;
}

}  // namespace

bool automaton_accepts(const AffineCartanData& d, const std::vector<int>& jprime, const Word& word) {
    const auto rev = reversed_transitions(d, jprime);
    int state = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 0 || *it > d.rank) return false;
        state = rev[state][*it];
        if (state < 0) return false;
    }
    return true;
}

std::vector<long long> enumerate_reduced(const AffineCartanData& d, const std::vector<int>& jprime, int max_length) {
    const auto rev = reversed_transitions(d, jprime);
    std::vector<long long> counts;
    std::vector<long long> at(rev.size(), 0);
    at[0] = 1;
    for (int l = 0; l <= max_length; ++l) {
        counts.push_back(std::accumulate(at.begin(), at.end(), 0LL));
        std::vector<long long> next(rev.size(), 0);
        for (std::size_t v = 0; v < rev.size(); ++v)
            if (at[v])
                for (int s : rev[v])
                    if (s >= 0) next[s] += at[v];
        at = std::move(next);
    }
    return counts;
}

std::vector<long long> count_reduced_words_oracle(const AffineCartanData& d, const std::vector<int>& jprime,
                                                  int max_length) {
    const std::vector<int> J = jprime.empty() ? std::vector<int>{} : complement(d, normalized_jprime(d, jprime));
    std::map<AffineElement, long long> words;
    std::vector<long long> counts(max_length + 1, 0);
    for (const auto& w : enumerate_grassmannians_up_to(d, max_length)) {
        if (!in_J_alcove(d, w, J)) continue;
        const int l = length_affine(d, w);
        long long c = l == 0 ? 1 : 0;
        for (int i = 0; i <= d.rank && l > 0; ++i) {
            auto it = words.find(aff_multiply(d, aff_generator(d, i), w));
            if (it != words.end() && length_affine(d, it->first) == l - 1) c += it->second;
        }
        words.emplace(w, c);
        counts[l] += c;
    }
    return counts;
}

StructureTable structure_constants(const GammaGraph& g) {
    const PMCertificate cert = multiplicative_basis_at(g.graph, 0);
    StructureTable t;
    t.words = g.words;
    t.legend = g.legend;
    t.verdict = cert.verdict;
    if (cert.verdict != Verdict::positively_multiplicative)
        throw std::runtime_error("graph is " + verdict_name(cert.verdict) + ": " + cert.reason);
    const int n = g.graph.size();
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) {
                auto p = cert.constant(j, k, i).as_laurent();
                if (!p) throw std::logic_error("certified constant is not a Laurent polynomial");
                if (!p->is_zero()) t.entries.push_back({j, k, i, std::move(*p)});
            }
    return t;
}

}  // namespace affgraph
