#include "affgraph/cartan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace affgraph {

std::string type_name(TypeLabel t) {
    switch (t) {
        case TypeLabel::A: return "A";
        case TypeLabel::B: return "B";
        case TypeLabel::C: return "C";
        case TypeLabel::D: return "D";
        case TypeLabel::G2: return "G";
    }
    return "?";
}

TypeLabel parse_type_label(const std::string& s) {
    if (s == "A" || s == "a") return TypeLabel::A;
    if (s == "B" || s == "b") return TypeLabel::B;
    if (s == "C" || s == "c") return TypeLabel::C;
    if (s == "D" || s == "d") return TypeLabel::D;
    if (s == "G" || s == "G2" || s == "g" || s == "g2") return TypeLabel::G2;
    throw std::invalid_argument("unknown type label '" + s + "'");
}

std::string AffineCartanData::name() const {
    if (type_label == TypeLabel::G2) return "G2";
    return type_name(type_label) + std::to_string(rank);
}

int AffineCartanData::root_index(const IntVec& coords) const {
    for (int k = 0; k < num_positive(); ++k)
        if (positive_roots[k] == coords) return k;
    return -1;
}

namespace {

RatMat finite_gram(TypeLabel t, int n) {
    RatMat g(n, RatVec(n, Rational(0)));
    auto link = [&](int i, int j, const Rational& v) {
        g[i][j] = v;
        g[j][i] = v;
    };
    switch (t) {
        case TypeLabel::A:
            if (n < 1) break;
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            return g;
        case TypeLabel::B:
            if (n < 2) break;
            for (int i = 0; i < n; ++i) g[i][i] = (i == n - 1) ? 1 : 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            return g;
        case TypeLabel::C:
            if (n < 2) break;
            for (int i = 0; i < n; ++i) g[i][i] = (i == n - 1) ? Rational(2) : Rational(1);
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, Rational(-1, 2));
            link(n - 2, n - 1, -1);
            return g;
        case TypeLabel::D:
            if (n < 4) break;
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            return g;
        case TypeLabel::G2:
            if (n != 2) break;
            g[0][0] = Rational(2, 3);
            g[1][1] = 2;
            link(0, 1, -1);
            return g;
    }
    throw std::invalid_argument("unsupported affine type " + type_name(t) + std::to_string(n));
}

long long to_integer(const Rational& q) {
    if (q.get_den() != 1) throw std::logic_error("expected an integer");
    return q.get_num().get_si();
}

Rational gram_pair(const RatMat& g, const IntVec& x, const IntVec& y) {
    Rational s = 0;
    const int n = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (y[j] != 0) s += g[i][j] * Rational(static_cast<long>(x[i] * y[j]));
    }
    return s;
}

// Primitive integer generator of the one-dimensional kernel of m, normalized
// so the first coordinate is positive.
IntVec primitive_null_vector(const IntMat& m) {
    const int n = static_cast<int>(m.size());
    RatMat a(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m[i][j]));
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (int j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    if (static_cast<int>(pivcol.size()) != n - 1) throw std::logic_error("affine Cartan matrix has corank != 1");
    std::vector<bool> piv(n, false);
    for (int c : pivcol) piv[c] = true;
    int free_col = static_cast<int>(std::find(piv.begin(), piv.end(), false) - piv.begin());
    RatVec v(n, Rational(0));
    v[free_col] = 1;
    for (std::size_t k = 0; k < pivcol.size(); ++k) v[pivcol[k]] = -a[k][free_col];
    mpz_class l = 1;
    for (auto& x : v) l = lcm(l, mpz_class(x.get_den()));
    IntVec out(n);
    mpz_class g = 0;
    for (int i = 0; i < n; ++i) {
        Rational s = v[i] * Rational(l);
        g = gcd(g, mpz_class(s.get_num()));
    }
    for (int i = 0; i < n; ++i) out[i] = to_integer(v[i] * Rational(l) / Rational(g));
    if (out[0] < 0)
        for (auto& x : out) x = -x;
    return out;
}

}  // namespace

RatMat rational_inverse(const IntMat& m) {
    const int n = static_cast<int>(m.size());
    RatMat a(n, RatVec(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m[i][j]));
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) throw std::domain_error("singular integer matrix");
        std::swap(a[c], a[p]);
        Rational inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    RatMat out(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

AffineCartanData build_affine_data(TypeLabel type, int rank) {
    AffineCartanData d;
    d.type_label = type;
    d.rank = rank;
    const int n = rank;
    d.gram = finite_gram(type, n);

    d.finite_cartan.assign(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.finite_cartan[i][j] = to_integer(2 * d.gram[i][j] / d.gram[i][i]);

    d.finite_cartan_inverse = rational_inverse(d.finite_cartan);

    mpz_class den = 1;
    for (int i = 0; i < n; ++i) den = lcm(den, mpz_class(d.gram[i][i].get_den()));
    d.length_scaled.resize(n);
    for (int i = 0; i < n; ++i) d.length_scaled[i] = to_integer(d.gram[i][i] * Rational(den));

    // positive roots: closure of the simple roots under simple reflections
    std::set<IntVec> seen;
    std::deque<IntVec> queue;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        IntVec b = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            long long c = 0;
            for (int j = 0; j < n; ++j) c += b[j] * d.finite_cartan[i][j];
            IntVec r = b;
            r[i] -= c;
            bool positive = std::all_of(r.begin(), r.end(), [](long long x) { return x >= 0; });
            if (positive && seen.insert(r).second) queue.push_back(r);
        }
    }
    d.positive_roots.assign(seen.begin(), seen.end());
    auto height = [](const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0LL); };
    std::sort(d.positive_roots.begin(), d.positive_roots.end(), [&](const IntVec& x, const IntVec& y) {
        if (height(x) != height(y)) return height(x) < height(y);
        return x > y;
    });
    for (const auto& r : d.positive_roots) {
        d.root_height.push_back(static_cast<int>(height(r)));
        Rational len = gram_pair(d.gram, r, r);
        IntVec c(n);
        for (int j = 0; j < n; ++j) c[j] = to_integer(Rational(static_cast<long>(r[j])) * d.gram[j][j] / len);
        d.positive_coroots.push_back(c);
    }
    d.theta_index = static_cast<int>(d.positive_roots.size()) - 1;
    d.theta = d.positive_roots.back();
    d.theta_coroot = d.positive_coroots.back();

    // affine Cartan matrix: node 0 carries alpha_0 = delta - theta
    d.affine_cartan.assign(n + 1, IntVec(n + 1, 0));
    d.affine_cartan[0][0] = 2;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) d.affine_cartan[i + 1][j + 1] = d.finite_cartan[i][j];
        IntVec e(n, 0);
        e[i] = 1;
        Rational theta_alpha = gram_pair(d.gram, d.theta, e);
        d.affine_cartan[0][i + 1] = to_integer(-2 * theta_alpha / gram_pair(d.gram, d.theta, d.theta));
        d.affine_cartan[i + 1][0] = to_integer(-2 * theta_alpha / d.gram[i][i]);
    }
    d.marks = primitive_null_vector(d.affine_cartan);
    IntMat t(n + 1, IntVec(n + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) t[i][j] = d.affine_cartan[j][i];
    d.comarks = primitive_null_vector(t);
    return d;
}

AffineCartanData build_affine_data(const std::string& type, int rank) {
    TypeLabel t = parse_type_label(type);
    if (t == TypeLabel::G2) rank = 2;
    return build_affine_data(t, rank);
}

const std::vector<IntVec>& positive_roots(const AffineCartanData& d) { return d.positive_roots; }

RootVector highest_root(const AffineCartanData& d) { return {d.theta, false}; }

RootVector coroot_of(const AffineCartanData& d, const RootVector& root) {
    if (root.is_coroot) throw std::invalid_argument("coroot_of expects a root");
    Rational len = gram_pair(d.gram, root.coords, root.coords);
    IntVec c(d.rank);
    for (int j = 0; j < d.rank; ++j)
        c[j] = to_integer(Rational(static_cast<long>(root.coords[j])) * d.gram[j][j] / len);
    return {c, true};
}

Rational pairing(const AffineCartanData& d, const RootVector& x, const RootVector& y) {
    if (y.is_coroot) throw std::invalid_argument("second pairing argument must be a root");
    if (x.coords.size() != y.coords.size() || static_cast<int>(x.coords.size()) != d.rank)
        throw std::invalid_argument("pairing of vectors from different root systems");
    if (!x.is_coroot) return gram_pair(d.gram, x.coords, y.coords);
    Rational s = 0;
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) s += Rational(static_cast<long>(x.coords[i] * d.finite_cartan[i][j] * y.coords[j]));
    return s;
}

Rational pairing(const AffineCartanData& d, const GeoWeight& x, const RootVector& y) {
    if (y.is_coroot) throw std::invalid_argument("second pairing argument must be a root");
    if (static_cast<int>(x.coords.size()) != d.rank || static_cast<int>(y.coords.size()) != d.rank)
        throw std::invalid_argument("pairing of vectors from different root systems");
    Rational s = 0;
    for (int j = 0; j < d.rank; ++j) s += x.coords[j] * Rational(static_cast<long>(y.coords[j]));
    return s;
}

GeoWeight fundamental_weight(const AffineCartanData& d, int i) {
    if (i < 1 || i > d.rank) throw std::out_of_range("fundamental weight index");
    GeoWeight w{RatVec(d.rank, Rational(0))};
    w.coords[i - 1] = 1;
    return w;
}

GeoWeight to_geo(const AffineCartanData& d, const RootVector& x) {
    GeoWeight w{RatVec(d.rank, Rational(0))};
    for (int j = 0; j < d.rank; ++j) {
        IntVec e(d.rank, 0);
        e[j] = 1;
        w.coords[j] = pairing(d, x, RootVector{e, false});
    }
    return w;
}

IntVec coroot_to_omega(const AffineCartanData& d, const IntVec& coroot) {
    IntVec w(d.rank, 0);
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) w[j] += coroot[i] * d.finite_cartan[i][j];
    return w;
}

namespace {

bool omega_to_coroot_impl(const AffineCartanData& d, const IntVec& omega, IntVec* out) {
    const RatMat* inv = &d.finite_cartan_inverse;
    // omega_j = sum_i c_i a_ij, so c = omega * A^{-1}
    IntVec c(d.rank);
    for (int i = 0; i < d.rank; ++i) {
        Rational s = 0;
        for (int j = 0; j < d.rank; ++j) s += Rational(static_cast<long>(omega[j])) * (*inv)[j][i];
        if (s.get_den() != 1) return false;
        c[i] = s.get_num().get_si();
    }
    if (out) *out = c;
    return true;
}

}  // namespace

IntVec omega_to_coroot(const AffineCartanData& d, const IntVec& omega) {
    IntVec c;
    if (!omega_to_coroot_impl(d, omega, &c)) throw std::invalid_argument("weight is not in the coroot lattice");
    return c;
}

bool omega_in_coroot_lattice(const AffineCartanData& d, const IntVec& omega) {
    return omega_to_coroot_impl(d, omega, nullptr);
}

}  // namespace affgraph
