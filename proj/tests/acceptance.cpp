// Acceptance run: one PASS/FAIL line per criterion, with wall time against the
// time budget. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "affgraph/gamma.hpp"
#include "affgraph/particles.hpp"
#include "affgraph/pmgraph.hpp"
#include "affgraph/serialize.hpp"
#include "fixtures.hpp"
#include "golden_graphs.hpp"
#include "poly_parse.hpp"

using namespace affgraph;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

std::vector<std::vector<int>> nonempty_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

std::string subset_string(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
    return out + "}";
}

bool nonnegative_polynomial(const RationalFunction& f) {
    const auto p = f.as_laurent();
    if (!p) return false;
    for (const auto& [m, c] : p->terms()) {
        if (c < 0) return false;
        for (int e : m.to_vector(p->nvars()))
            if (e < 0) return false;
    }
    return true;
}

WeightedDigraph from_grid(const fixtures::Grid& grid, int nvars) {
    WeightedDigraph g(nvars);
    for (std::size_t i = 0; i < grid.size(); ++i) g.add_vertex("v" + std::to_string(i + 1));
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid.size(); ++j)
            if (grid[i][j] != "0")
                g.add_edge(static_cast<int>(j), static_cast<int>(i), kUntyped, testutil::lp(grid[i][j], nvars));
    return g;
}

GeoWeight omega_vec(std::initializer_list<long> c) {
    GeoWeight g;
    for (long x : c) g.coords.push_back(Rational(x));
    return g;
}

std::vector<GeoWeight> coroot_basis(const AffineCartanData& d) {
    std::vector<GeoWeight> out;
    for (int i = 0; i < d.rank; ++i) {
        IntVec unit(d.rank, 0);
        unit[i] = 1;
        GeoWeight g;
        for (auto x : coroot_to_omega(d, unit)) g.coords.push_back(Rational(static_cast<long>(x)));
        out.push_back(g);
    }
    return out;
}

std::vector<AffineElement> elements(const AffineCartanData& d, const std::vector<std::string>& words) {
    std::vector<AffineElement> out;
    for (const auto& w : words) out.push_back(aff_from_word(d, parse_word(w)));
    return out;
}

void golden(Outcome& o, const AffineCartanData& d, const GammaGraph& g, const golden::Graph& want) {
    const std::string diff = golden::compare(d, g, want);
    o.require(diff.empty(), diff);
}

// ---- criteria ----

Outcome c1_b0_matrix() {
    Outcome o;
    const auto a2 = build_affine_data("A", 2);
    const std::string got = matrix_string(build_gamma_B0(a2).graph.adjacency_laurent());
    o.require(got == "[[0, z1 + z2], [1, 0]]", "got " + got);
    return o;
}

Outcome c2_b0_g2() {
    Outcome o;
    const auto g2 = build_affine_data("G2", 2);
    golden(o, g2, build_gamma_B0(g2), golden::kB0G2);
    for (const auto& w : golden::kB0G2.vertices) {
        const Word word = w == "e" ? Word{} : parse_word(w);
        o.require(length_affine(g2, aff_from_word(g2, word)) == static_cast<int>(word.size()), w + " is not reduced");
    }
    return o;
}

Outcome c3_six_vertex() {
    Outcome o;
    const auto six = from_grid(fixtures::kSixAdjacency, 3);
    const auto mu = minimal_polynomial(six.adjacency());
    bool mu_ok = mu.size() == fixtures::kSixMinimalPolynomial.size();
    for (std::size_t k = 0; mu_ok && k < mu.size(); ++k) mu_ok = mu[k] == testutil::rf(fixtures::kSixMinimalPolynomial[k], 3);
    o.require(mu_ok, "minimal polynomial differs");
    const FFMatrix m1 = path_matrix(six, 0);
    o.require(m1 == testutil::matrix(fixtures::kSixM1, 3), "M1 differs");
    const auto inv = mat_inverse(m1);
    o.require(inv.invertible && inv.inverse == testutil::matrix(fixtures::kSixM1Inverse, 3), "M1 inverse differs");
    const PMCertificate cert = multiplicative_basis_at(six, 0);
    o.require(cert.verdict == Verdict::positively_multiplicative, "verdict " + verdict_name(cert.verdict));
    if (cert.basis.size() == 6) {
        o.require(cert.basis[2] == testutil::matrix(fixtures::kSixB3, 3), "b3 differs");
        for (const auto& b : cert.basis)
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j)
                    if (!nonnegative_polynomial(b(i, j))) {
                        o.require(false, "basis entry " + b(i, j).to_string() + " is not in Q+[z1,z2,z3]");
                        return o;
                    }
    } else {
        o.require(false, "no basis");
    }
    return o;
}

struct Case {
    AffineCartanData d;
    std::vector<int> jprime;  // empty for rho
};

std::vector<Case> theorem_cases() {
    std::vector<Case> out;
    for (auto [t, n] : std::vector<std::pair<const char*, int>>{{"A", 2}, {"A", 3}, {"C", 2}, {"C", 3}, {"G2", 2}})
        out.push_back({build_affine_data(t, n), {}});
    for (auto [t, n] : std::vector<std::pair<const char*, int>>{{"A", 3}, {"C", 3}, {"G2", 2}}) {
        const auto d = build_affine_data(t, n);
        for (const auto& s : nonempty_subsets(n)) out.push_back({d, s});
    }
    return out;
}

std::string case_name(const Case& c) {
    return c.d.name() + (c.jprime.empty() ? " rho" : " " + subset_string(c.jprime));
}

Outcome c4_main_theorem() {
    Outcome o;
    for (const auto& c : theorem_cases()) {
        const auto r = verify_main_theorem(c.d, c.jprime, false);
        o.require(r.identity_holds, case_name(c) + ": " + r.mismatch_detail);
    }
    return o;
}

Outcome c5_certificates() {
    Outcome o;
    for (auto [t, n] : std::vector<std::pair<const char*, int>>{{"A", 2}, {"A", 3}, {"C", 2}, {"C", 3}, {"G2", 2}}) {
        const auto d = build_affine_data(t, n);
        const GammaGraph b0 = build_gamma_B0(d);
        const PMCertificate cert = multiplicative_basis_at(b0.graph, b0.vertex_of(aff_identity(d)));
        o.require(cert.verdict == Verdict::positively_multiplicative, d.name() + " B0: " + verdict_name(cert.verdict));
        o.require(cert.minimal_polynomial_degree == b0.graph.size(),
                  d.name() + " B0: deg mu " + std::to_string(cert.minimal_polynomial_degree));
    }
    for (const auto& c : theorem_cases()) {
        const auto r = verify_main_theorem(c.d, c.jprime, true);
        o.require(r.verdict == Verdict::positively_multiplicative, case_name(c) + ": " + verdict_name(r.verdict));
        o.require(r.minimal_polynomial_degree == r.vertices,
                  case_name(c) + ": deg mu " + std::to_string(r.minimal_polynomial_degree) + " < " +
                      std::to_string(r.vertices));
    }
    return o;
}

Outcome c6_pieri() {
    Outcome o;
    for (auto [t, n] : std::vector<std::pair<const char*, int>>{{"A", 2}, {"C", 2}, {"G2", 2}}) {
        const auto d = build_affine_data(t, n);
        const auto r = verify_pieri(d, 8);
        o.require(r.checked > 0 && r.mismatches.empty(),
                  d.name() + ": " + std::to_string(r.mismatches.size()) + " mismatches");
    }
    return o;
}

Outcome c7_expansion() {
    Outcome o;
    const auto r = verify_expansion(build_affine_data("A", 2), 6);
    o.require(r.level_sizes == std::vector<int>{1, 1, 2, 2, 3, 3}, "level sizes differ");
    o.require(r.isomorphic, "not isomorphic " + r.detail);
    o.require(r.identified, "translation map fails " + r.detail);
    return o;
}

Outcome c8_automaton() {
    Outcome o;
    const auto g2 = build_affine_data("G2", 2);
    for (const Word& w : {Word{2, 1, 2, 1, 2, 0}, Word{1, 2, 1, 2, 0, 1, 2, 1, 2, 0}}) {
        const auto x = aff_from_word(g2, w);
        o.require(automaton_accepts(g2, {}, w), "word rejected");
        o.require(is_grassmannian(g2, x) && length_affine(g2, x) == static_cast<int>(w.size()),
                  "word is not reduced Grassmannian");
    }
    o.require(enumerate_reduced(g2, {}, 10) == count_reduced_words_oracle(g2, {}, 10), "counts differ from BFS");
    return o;
}

Outcome c9_golden() {
    Outcome o;
    const auto a2 = build_affine_data("A", 2), a3 = build_affine_data("A", 3), g2 = build_affine_data("G2", 2),
               c3 = build_affine_data("C", 3);
    golden(o, a2, build_gamma_rho(a2), golden::kRhoA2);
    golden(o, g2, build_gamma_rho(g2), golden::kRhoG2);
    golden(o, a3, build_gamma_gamma(a3, {1}), golden::kOmega1A3);
    golden(o, a3, build_gamma_gamma(a3, {2}), golden::kOmega2A3);
    golden(o, g2, build_gamma_gamma(g2, {1}), golden::kOmega1G2);
    golden(o, g2, build_gamma_gamma(g2, {2}), golden::kOmega2G2);
    golden(o, c3, build_gamma_gamma(c3, {2}), golden::kOmega2C3);
    golden(o, c3, build_gamma_gamma(c3, {3}), golden::kOmega3C3);
    golden(o, a2,
           build_gamma_fundamental(a2, {omega_vec({1, 0}), omega_vec({0, 2})},
                                   elements(a2, {"e", "0", "10", "210"})),
           golden::kDomainLA2);
    golden(o, a2, build_gamma_fundamental(a2, coroot_basis(a2), elements(a2, {"e", "0", "10", "20", "210", "120"})),
           golden::kDomainQA2);
    return o;
}

Outcome c10_uj() {
    Outcome o;
    for (auto [t, n] : std::vector<std::pair<const char*, int>>{{"G2", 2}, {"A", 3}}) {
        const auto d = build_affine_data(t, n);
        const auto r = verify_UJ(d, {2}, 4);
        o.require(r.passed(), d.name() + ": " + r.detail);
        o.require(r.alcoves > 0 && r.crossings_checked > 0, d.name() + ": empty window");
    }
    return o;
}

Outcome c11_models() {
    Outcome o;
    const auto a3 = build_affine_data("A", 3), c3 = build_affine_data("C", 3);
    for (const auto& [d, jp] : std::vector<std::pair<AffineCartanData, std::vector<int>>>{
             {a3, {1, 2}}, {c3, {2}}, {c3, {3}}}) {
        const auto r = verify_particle_model(d, jp);
        o.require(r.passed(), d.name() + " " + subset_string(jp) + ": " + r.detail);
    }
    const bool tab =
        typed_isomorphic(key_orbit_graph(a3, {1, 2}).graph, build_gamma_gamma(a3, {1, 2}).graph, IsoOptions{true, false})
            .isomorphic;
    o.require(tab, "key tableau orbit graph is not isomorphic");
    return o;
}

Outcome c12_dihedral() {
    Outcome o;
    for (auto [a, b, c, e] : std::vector<std::array<long, 4>>{{2, 1, 1, 1}, {1, 2, 1, 1}}) {
        const auto cert = multiplicative_basis_at(dihedral_automaton(a, b, c, e), 0);
        o.require(cert.verdict != Verdict::positively_multiplicative && cert.conclusive,
                  "(" + std::to_string(a) + "," + std::to_string(b) + ",1,1) certified positive");
    }
    return o;
}

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "B0(A2) adjacency string", 1, c1_b0_matrix},
        {2, "B0(G2) golden graph and reduced words", 5, c2_b0_g2},
        {3, "six-vertex certificate: mu, M1, M1^-1, b3, positivity", 5, c3_six_vertex},
        {4, "Mat = transpose(bar A) for rho and every J'", 60, c4_main_theorem},
        {5, "positivity certificates with deg mu = vertex count", 120, c5_certificates},
        {6, "Pieri index sets up to length 8 in A2, C2, G2", 30, c6_pieri},
        {7, "expansion of B0(A2) to depth 6", 5, c7_expansion},
        {8, "G2 reduced Grassmannian word automaton", 10, c8_automaton},
        {9, "golden graphs", 10, c9_golden},
        {10, "bullet coordinates on A_J (G2 and A3, J'={2})", 30, c10_uj},
        {11, "particle and key tableau models", 10, c11_models},
        {12, "dihedral automaton is not positively multiplicative", 1, c12_dihedral},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(secs <= c.budget_s, "over the time budget");
        if (!o.ok) ++failed;
        std::ostringstream line;
        line << (o.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.title << "  ("
             << std::fixed << std::setprecision(2) << secs << " s of " << std::setprecision(0) << c.budget_s << " s)";
        for (const auto& n : o.notes) line << "\n        " << n;
        std::cout << line.str() << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
