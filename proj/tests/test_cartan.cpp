#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "affgraph/cartan.hpp"

using namespace affgraph;

namespace {

struct Case {
    TypeLabel t;
    int n;
    std::size_t expected_roots;  // textbook root counts per family
};

const std::vector<Case> kCases = {
    {TypeLabel::A, 1, 1},  {TypeLabel::A, 2, 3},  {TypeLabel::A, 3, 6}, {TypeLabel::A, 4, 10},
    {TypeLabel::B, 2, 4},  {TypeLabel::B, 3, 9},  {TypeLabel::C, 2, 4}, {TypeLabel::C, 3, 9},
    {TypeLabel::C, 4, 16}, {TypeLabel::D, 4, 12}, {TypeLabel::D, 5, 20}, {TypeLabel::G2, 2, 6},
};

IntVec mat_vec(const IntMat& m, const IntVec& v) {
    IntVec r(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

long long gcd_all(const IntVec& v) {
    long long g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

// Leading principal minors of a rational matrix, by elimination.
bool positive_definite(RatMat g) {
    const std::size_t n = g.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (g[k][k] <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = g[i][k] / g[k][k];
            for (std::size_t j = k; j < n; ++j) g[i][j] -= f * g[k][j];
        }
    }
    return true;
}

}  // namespace

TEST_CASE("marks and comarks") {
    auto a2 = build_affine_data(TypeLabel::A, 2);
    CHECK(a2.marks == IntVec{1, 1, 1});
    auto g2 = build_affine_data(TypeLabel::G2, 2);
    CHECK(g2.marks == IntVec{1, 3, 2});
    CHECK(g2.comarks == IntVec{1, 1, 2});
    CHECK(g2.finite_cartan == IntMat{{2, -3}, {-1, 2}});
    auto c3 = build_affine_data(TypeLabel::C, 3);
    CHECK(c3.marks == IntVec{1, 2, 2, 1});
    CHECK(c3.comarks == IntVec{1, 1, 1, 1});
}

TEST_CASE("positive roots and highest roots") {
    auto a2 = build_affine_data(TypeLabel::A, 2);
    CHECK(a2.positive_roots == std::vector<IntVec>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(highest_root(a2).coords == IntVec{1, 1});
    auto g2 = build_affine_data(TypeLabel::G2, 2);
    CHECK(g2.positive_roots.size() == 6);
    CHECK(highest_root(g2).coords == IntVec{3, 2});
    CHECK(g2.theta_coroot == IntVec{1, 2});
    auto c3 = build_affine_data(TypeLabel::C, 3);
    CHECK(c3.positive_roots.size() == 9);
    CHECK(highest_root(c3).coords == IntVec{2, 2, 1});
    CHECK(c3.root_index({2, 2, 1}) >= 0);
    CHECK_THROWS(build_affine_data(TypeLabel::C, 1));
    CHECK_THROWS(build_affine_data("X", 2));
}

TEST_CASE("pairings") {
    auto a2 = build_affine_data(TypeLabel::A, 2);
    RootVector a1{{1, 0}, false};
    RootVector th{{1, 1}, false};
    CHECK(pairing(a2, fundamental_weight(a2, 1), a1) == 1);
    CHECK(pairing(a2, fundamental_weight(a2, 2), a1) == 0);
    CHECK(pairing(a2, th, th) == 2);
    CHECK(pairing(a2, RootVector{{1, 1}, true}, a1) == 1);
    auto g2 = build_affine_data(TypeLabel::G2, 2);
    CHECK_THROWS(pairing(a2, RootVector{{1, 0, 0}, false}, a1));
    CHECK(to_geo(g2, coroot_of(g2, highest_root(g2))).coords == RatVec{0, 1});
    CHECK(coroot_to_omega(g2, {1, 2}) == IntVec{0, 1});
    CHECK(omega_to_coroot(g2, {0, 1}) == IntVec{1, 2});
    CHECK_FALSE(omega_in_coroot_lattice(a2, {1, 0}));
    CHECK(omega_in_coroot_lattice(a2, {2, -1}));
}

TEST_CASE("structural invariants for every supported type") {
    for (const auto& c : kCases) {
        CAPTURE(c.n);
        auto d = build_affine_data(c.t, c.n);
        const int n = d.rank;
        CHECK(d.positive_roots.size() == c.expected_roots);
        CHECK(mat_vec(d.affine_cartan, d.marks) == IntVec(n + 1, 0));
        IntVec left(n + 1, 0);
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n; ++i) left[j] += d.comarks[i] * d.affine_cartan[i][j];
        CHECK(left == IntVec(n + 1, 0));
        CHECK(gcd_all(d.marks) == 1);
        CHECK(gcd_all(d.comarks) == 1);
        CHECK(d.marks[0] == 1);
        CHECK(d.comarks[0] == 1);
        // marks beyond node 0 are the coordinates of theta
        CHECK(IntVec(d.marks.begin() + 1, d.marks.end()) == d.theta);
        CHECK(IntVec(d.comarks.begin() + 1, d.comarks.end()) == d.theta_coroot);
        long long h = std::accumulate(d.marks.begin(), d.marks.end(), 0LL);
        CHECK(static_cast<long long>(d.positive_roots.size()) * 2 == n * h);
        CHECK(pairing(d, highest_root(d), highest_root(d)) == 2);
        CHECK(positive_definite(d.gram));
        CHECK(positive_definite([&] {
            RatMat m(n, RatVec(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m[i][j] = Rational(static_cast<long>(d.finite_cartan[i][j]));
            return m;
        }()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(Rational(static_cast<long>(d.finite_cartan[i][j])) == 2 * d.gram[i][j] / d.gram[i][i]);
        // theta dominates every positive root
        for (const auto& r : d.positive_roots)
            for (int j = 0; j < n; ++j) CHECK(r[j] <= d.theta[j]);
        // coroot coordinates are integral and pair to 2 with their root
        for (std::size_t k = 0; k < d.positive_roots.size(); ++k) {
            RootVector co{d.positive_coroots[k], true};
            CHECK(pairing(d, co, RootVector{d.positive_roots[k], false}) == 2);
        }
    }
}
