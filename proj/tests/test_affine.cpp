#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "affgraph/affine.hpp"

using namespace affgraph;

namespace {

// Word-length oracle in the Cayley graph of (W_a, S_a), right multiplication.
std::map<AffineElement, int> cayley_ball(const AffineCartanData& d, int radius) {
    std::map<AffineElement, int> dist;
    std::vector<AffineElement> frontier{aff_identity(d)};
    dist[frontier[0]] = 0;
    for (int level = 1; level <= radius; ++level) {
        std::vector<AffineElement> next;
        for (const auto& x : frontier)
            for (int i = 0; i <= d.rank; ++i) {
                auto y = aff_multiply(d, x, aff_generator(d, i));
                if (dist.emplace(y, level).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return dist;
}

int index_of(const AffineCartanData& d, IntVec root) { return d.root_index(root); }

}  // namespace

TEST_CASE("generators and group law") {
    auto a2 = build_affine_data(TypeLabel::A, 2);
    auto s0 = aff_generator(a2, 0);
    CHECK(aff_multiply(a2, s0, s0) == aff_identity(a2));
    CHECK(s0.finite == reflection(a2, a2.theta_index));
    CHECK(s0.trans == IntVec{1, 1});
    auto t = aff_multiply(a2, finite_part(a2, reflection(a2, a2.theta_index)), s0);
    CHECK(t == translation(a2, {1, 1}));
    CHECK(length_affine(a2, t) == 4);
    auto x = aff_from_word(a2, {0, 1, 2, 0, 2});
    CHECK(aff_multiply(a2, x, aff_inverse(a2, x)) == aff_identity(a2));
    CHECK(aff_multiply(a2, aff_inverse(a2, x), x) == aff_identity(a2));
    CHECK_THROWS(aff_generator(a2, 3));
}

TEST_CASE("alcove coordinates") {
    auto a2 = build_affine_data(TypeLabel::A, 2);
    CHECK(alcove_coordinates(a2, aff_identity(a2)) == IntVec{0, 0, 0});
    const int r1 = index_of(a2, {1, 0}), r2 = index_of(a2, {0, 1}), th = index_of(a2, {1, 1});
    auto k = alcove_coordinates(a2, aff_generator(a2, 0));
    CHECK(k[r1] == 0);
    CHECK(k[r2] == 0);
    CHECK(k[th] == 1);
    k = alcove_coordinates(a2, translation(a2, {1, 1}));
    CHECK(k[r1] == 1);
    CHECK(k[r2] == 1);
    CHECK(k[th] == 2);
}

TEST_CASE("translations in G2") {
    auto g2 = build_affine_data(TypeLabel::G2, 2);
    auto t2 = translation(g2, omega_to_coroot(g2, {0, 1}));
    auto t1 = translation(g2, omega_to_coroot(g2, {1, 0}));
    CHECK(length_affine(g2, t2) == 6);
    CHECK(length_affine(g2, t1) == 10);
    CHECK(aff_from_word(g2, {2, 1, 2, 1, 2, 0}) == t2);
    CHECK(aff_from_word(g2, {1, 2, 1, 2, 0, 1, 2, 1, 2, 0}) == t1);
}

TEST_CASE("length agrees with the Cayley-graph oracle") {
    for (auto [t, n] : std::vector<std::pair<TypeLabel, int>>{{TypeLabel::A, 2}, {TypeLabel::C, 2}, {TypeLabel::G2, 2}}) {
        auto d = build_affine_data(t, n);
        auto ball = cayley_ball(d, 8);
        for (const auto& [w, l] : ball) {
            CHECK(length_affine(d, w) == l);
            auto word = aff_reduced_word(d, w);
            CHECK(static_cast<int>(word.size()) == l);
            CHECK(aff_from_word(d, word) == w);
        }
    }
}

TEST_CASE("crossings") {
    auto a2 = build_affine_data(TypeLabel::A, 2);
    auto e = aff_identity(a2);
    CHECK(crossing_sign(a2, e, 1) == Crossing::negative);
    CHECK(crossing_sign(a2, e, 2) == Crossing::negative);
    CHECK(crossing_sign(a2, e, 0) == Crossing::positive);
    CHECK(crossing_sign(a2, finite_part(a2, from_word(a2, {1, 2, 1})), 0) == Crossing::negative);
    for (auto [t, n] : std::vector<std::pair<TypeLabel, int>>{{TypeLabel::A, 2}, {TypeLabel::C, 2}, {TypeLabel::G2, 2}}) {
        auto d = build_affine_data(t, n);
        std::vector<IntVec> shifts;
        for (int j = 0; j < n; ++j) {
            IntVec v(n, 0);
            v[j] = 1;
            shifts.push_back(v);
            v[j] = -2;
            shifts.push_back(v);
        }
        for (const auto& [w, l] : cayley_ball(d, 5))
            for (int i = 0; i <= n; ++i) {
                auto c = crossing_sign(d, w, i);
                auto back = crossing_sign(d, aff_multiply(d, aff_generator(d, i), w), i);
                CHECK(c != back);
                for (const auto& s : shifts) CHECK(crossing_sign(d, aff_multiply(d, w, translation(d, s)), i) == c);
            }
    }
}

TEST_CASE("affine Grassmannians") {
    auto a2 = build_affine_data(TypeLabel::A, 2);
    CHECK(is_grassmannian(a2, aff_identity(a2)));
    CHECK_FALSE(is_grassmannian(a2, aff_generator(a2, 1)));
    CHECK(is_grassmannian(a2, aff_generator(a2, 0)));
    std::map<int, int> counts;
    for (const auto& w : enumerate_grassmannians_up_to(a2, 4)) ++counts[length_affine(a2, w)];
    CHECK(counts == std::map<int, int>{{0, 1}, {1, 1}, {2, 2}, {3, 2}, {4, 3}});
    // Oracle: minimal length in the coset wW, read off the Cayley ball.
    for (auto t : {TypeLabel::A, TypeLabel::G2}) {
        auto d = build_affine_data(t, 2);
        auto ball = cayley_ball(d, 7);
        std::set<AffineElement> expected;
        for (const auto& [w, l] : ball) {
            bool minimal = true;
            for (int i = 1; i <= d.rank; ++i)
                if (length_affine(d, aff_multiply(d, w, aff_generator(d, i))) < l) minimal = false;
            if (minimal && l <= 5) expected.insert(w);
        }
        auto got = enumerate_grassmannians_up_to(d, 5);
        CHECK(std::set<AffineElement>(got.begin(), got.end()) == expected);
        for (const auto& w : got) CHECK(is_grassmannian(d, w));
    }
}

TEST_CASE("star translation") {
    auto a2 = build_affine_data(TypeLabel::A, 2);
    auto e = aff_identity(a2);
    // A_0 s1 s0 is the translate of A_0 by omega_2 in this labelling (and s2 s0 by omega_1)
    CHECK(star_translate(a2, aff_from_word(a2, {1, 0}), {0, -1}) == e);
    CHECK(star_translate(a2, aff_from_word(a2, {2, 0}), {-1, 0}) == e);
    CHECK(star_translate(a2, e, {0, 1}) == aff_from_word(a2, {1, 0}));
    CHECK(star_translate(a2, aff_from_word(a2, {0, 2}), {0, 0}) == aff_from_word(a2, {0, 2}));
    for (auto [t, n] : std::vector<std::pair<TypeLabel, int>>{{TypeLabel::A, 2}, {TypeLabel::C, 2}, {TypeLabel::G2, 2}}) {
        auto d = build_affine_data(t, n);
        std::vector<IntVec> weights{{1, 0}, {0, 1}, {-1, 2}, {2, -1}};
        for (const auto& [w, l] : cayley_ball(d, 4)) {
            for (const auto& mu : weights) {
                auto x = star_translate(d, w, mu);
                // shifting the alcove shifts every k_alpha by (mu, alpha)
                auto k0 = alcove_coordinates(d, w);
                auto k1 = alcove_coordinates(d, x);
                for (int r = 0; r < d.num_positive(); ++r) {
                    long long shift = 0;
                    for (int j = 0; j < n; ++j) shift += mu[j] * d.positive_roots[r][j];
                    CHECK(k1[r] == k0[r] + shift);
                }
                for (const auto& nu : weights) {
                    IntVec sum{mu[0] + nu[0], mu[1] + nu[1]};
                    CHECK(star_translate(d, x, nu) == star_translate(d, w, sum));
                }
            }
            for (const IntVec& c : std::vector<IntVec>{{1, 0}, {0, 1}, {1, -1}}) {
                CHECK(star_translate(d, w, coroot_to_omega(d, c)) == aff_multiply(d, w, translation(d, c)));
            }
        }
    }
}

TEST_CASE("J-alcoves and projection") {
    auto g2 = build_affine_data(TypeLabel::G2, 2);
    std::vector<int> J{1};
    CHECK(in_J_alcove(g2, aff_from_word(g2, {0, 2}), J));
    CHECK_FALSE(in_J_alcove(g2, aff_generator(g2, 1), J));
    CHECK(in_J_alcove(g2, aff_generator(g2, 1), {}));
    auto p = project_to_J_alcove(g2, aff_generator(g2, 1), J);
    CHECK(in_J_alcove(g2, p, J));
    CHECK(alcove_coordinates(g2, p)[g2.root_index({1, 0})] == 0);

    for (auto [t, n] : std::vector<std::pair<TypeLabel, int>>{{TypeLabel::A, 2}, {TypeLabel::G2, 2}, {TypeLabel::A, 3}}) {
        auto d = build_affine_data(t, n);
        std::vector<std::vector<int>> subsets;
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) s.push_back(i + 1);
            subsets.push_back(s);
        }
        auto ball = cayley_ball(d, n == 3 ? 4 : 5);
        for (const auto& Jset : subsets) {
            for (const auto& [x, l] : ball) {
                auto y = project_to_J_alcove(d, x, Jset);
                CHECK(in_J_alcove(d, y, Jset));
                // x^{-1} y lies in W_J x Q_J^vee
                auto f = aff_multiply(d, aff_inverse(d, x), y);
                for (int j = 1; j <= n; ++j)
                    if (std::find(Jset.begin(), Jset.end(), j) == Jset.end()) CHECK(f.trans[j - 1] == 0);
                bool in_parabolic = false;
                for (const auto& v : enumerate_parabolic(d, Jset))
                    if (v == f.finite) in_parabolic = true;
                CHECK(in_parabolic);
                CHECK(project_to_J_alcove(d, y, Jset) == y);
            }
        }
    }
}

TEST_CASE("bullet action and the UJ factorization") {
    for (auto [t, n, Jp] : std::vector<std::tuple<TypeLabel, int, std::vector<int>>>{
             {TypeLabel::G2, 2, {2}}, {TypeLabel::A, 3, {2}}, {TypeLabel::A, 2, {1}}}) {
        auto d = build_affine_data(t, n);
        auto J = complement(d, Jp);
        for (const auto& u : enumerate_WJ(d, J)) {
            auto fu = finite_part(d, u);
            IntVec zero(Jp.size(), 0);
            CHECK(bullet_translate(d, fu, zero, J) == fu);
            for (long long a = -2; a <= 2; ++a) {
                IntVec cls(Jp.size(), a);
                auto x = bullet_translate(d, fu, cls, J);
                CHECK(in_J_alcove(d, x, J));
                auto f = uj_decompose(d, x, J);
                CHECK(f.u == u);
                CHECK(f.cls == cls);
                // lift independence
                IntVec lam = lift_class(d, cls, J);
                for (int j : J) lam[j - 1] += 3;
                CHECK(project_to_J_alcove(d, aff_multiply(d, fu, translation(d, lam)), J) == x);
                for (long long b = -1; b <= 1; ++b) {
                    IntVec c2(Jp.size(), b);
                    IntVec c3(Jp.size(), a + b);
                    CHECK(bullet_translate(d, x, c2, J) == bullet_translate(d, fu, c3, J));
                }
            }
        }
    }
    auto g2 = build_affine_data(TypeLabel::G2, 2);
    std::vector<int> J{1};
    // translations whose point lies in the closure of A_J
    for (const IntVec& c : std::vector<IntVec>{{0, 0}, {0, -1}, {1, 2}, {1, 1}}) {
        auto v = vJ(g2, c, J);
        CHECK(in_J_alcove(g2, AffineElement{v, c}, J));
    }
    CHECK(vJ(g2, {0, -1}, J) == simple_reflection(g2, 1));
    CHECK_THROWS(vJ(g2, {1, 0}, J));
}

TEST_CASE("windows") {
    auto a2 = build_affine_data(TypeLabel::A, 2);
    auto win = enumerate_window(a2, 1);
    for (const auto& w : win) {
        for (auto k : alcove_coordinates(a2, w)) CHECK(std::abs(k) <= 1);
    }
    // brute force: every alcove in the ball with |k| <= 1 is in the window
    std::set<AffineElement> ws(win.begin(), win.end());
    for (const auto& [w, l] : cayley_ball(a2, 8)) {
        bool inside = true;
        for (auto k : alcove_coordinates(a2, w))
            if (std::abs(k) > 1) inside = false;
        CHECK(inside == (ws.count(w) == 1));
    }
    CHECK(aff_word_string(a2, aff_identity(a2)) == "e");
    CHECK(aff_word_string(a2, aff_from_word(a2, {1, 0})) == "10");
}
