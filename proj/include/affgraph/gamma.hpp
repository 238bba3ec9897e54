#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affgraph/affine.hpp"
#include "affgraph/pmgraph.hpp"

namespace affgraph {

enum class GammaKind { rho, gamma, B0, fundamental_domain, WJ_geometric, grassmannian_truncation };
std::string kind_name(GammaKind k);

// A graph built from the root datum. Vertex v carries the alcove `elements[v]`
// (finite Weyl group elements are embedded through finite_part) and the reduced
// word `words[v]`, which is also the vertex label. Edge types are the indices
// 0..n of the affine simple reflections.
struct GammaGraph {
    WeightedDigraph graph;
    GammaKind kind = GammaKind::rho;
    std::vector<int> jprime;       // gamma and WJ_geometric kinds
    std::vector<IntVec> lattice;   // omega-coordinates of the lattice basis (B0, fundamental, truncation)
    std::vector<std::string> legend;  // legend[k] describes the variable z_{k+1}
    std::vector<AffineElement> elements;
    std::vector<std::string> words;

    int vertex_of(const AffineElement& w) const;  // -1 when absent
};

// Vertices W. Variables z_i stand for the coroots alpha_i^vee.
GammaGraph build_gamma_rho(const AffineCartanData& d);
// Vertices W^J with J the complement of jprime. Variables are indexed by the
// entries of jprime in increasing order and stand for the classes of the
// corresponding simple coroots modulo Q_J^vee.
GammaGraph build_gamma_gamma(const AffineCartanData& d, const std::vector<int>& jprime);

// Graph of multiplication by xi_{rho_1} on the basis indexed by an
// L-fundamental domain. `lattice_basis` holds weights with integral
// omega-coordinates; variable z_k is the k-th basis vector.
// Throws std::invalid_argument with a counterexample alcove when the domain
// does not tile a test window.
GammaGraph build_gamma_fundamental(const AffineCartanData& d, const std::vector<GeoWeight>& lattice_basis,
                                   const std::vector<AffineElement>& domain);

std::vector<AffineElement> compute_B0(const AffineCartanData& d);
// Variables z_k = z^{omega_k}.
GammaGraph build_gamma_B0(const AffineCartanData& d);

// Vertices W^J. Built from positive crossings inside the J-alcove and the
// factorization x = u . t_class. Entry (u', w) of the result is the
// coefficient of xi_{u'} in xi_{rho_1} xi_w. Variables follow build_gamma_gamma.
GammaGraph build_gamma_WJ_geometric(const AffineCartanData& d, const std::vector<int>& jprime);
// Mat_B as a plain matrix, A[u'][w] in the column convention of WeightedDigraph.
std::vector<std::vector<LaurentPoly>> multiplication_matrix(const GammaGraph& g);

// Weak-order graph on affine Grassmannian elements of length <= max_length,
// arrows w -> s_i w with weight a_i.
GammaGraph build_grassmannian_truncation(const AffineCartanData& d, int max_length);

// Compares expand(Gamma_B0, e, depth) with the truncation at length depth - 1.
// `identified` checks the explicit map (v, z^beta) -> v * t_beta on vertices
// and arrow weights. Arrow types are not compared: translation by a weight
// outside the coroot lattice permutes the wall types.
struct ExpansionReport {
    std::vector<int> level_sizes;
    bool isomorphic = false;  // as weighted graphs
    bool identified = false;
    std::string detail;
};
ExpansionReport verify_expansion(const AffineCartanData& d, int depth);

std::vector<std::vector<LaurentPoly>> bar_transpose(const std::vector<std::vector<LaurentPoly>>& a);

struct MainTheoremReport {
    int vertices = 0;
    bool identity_holds = false;
    std::optional<std::pair<int, int>> first_mismatch;  // (row, column)
    std::string mismatch_detail;
    bool certificate_run = false;
    Verdict verdict = Verdict::not_multiplicative;
    int minimal_polynomial_degree = 0;
    bool passed() const {
        return identity_holds && (!certificate_run || verdict == Verdict::positively_multiplicative);
    }
};
// Empty jprime stands for rho. With run_certificate the geometric graph
// (multiplication by xi_{rho_1} on W^J) is certified at e.
MainTheoremReport verify_main_theorem(const AffineCartanData& d, const std::vector<int>& jprime,
                                      bool run_certificate = true);

// Alcoves of A_J inside the window |k_alpha| <= bound against the pairs
// (u, class) with u in W^J. `bijective` checks u . t_class = x for the
// decomposition of every such alcove, distinct pairs for distinct alcoves, and
// that no pair with image in the window is missed. `crossings_invariant`
// checks, for every wall x | s_i x inside A_J, that shifting both sides by a
// unit class keeps them adjacent through s_i with the same crossing sign.
struct UJReport {
    int alcoves = 0;
    int crossings_checked = 0;
    bool bijective = false;
    bool crossings_invariant = false;
    std::string detail;
    bool passed() const { return bijective && crossings_invariant; }
};
UJReport verify_UJ(const AffineCartanData& d, const std::vector<int>& jprime, long long bound);

struct PieriReport {
    int checked = 0;
    std::vector<std::string> mismatches;  // reduced words of failing elements
};
PieriReport verify_pieri(const AffineCartanData& d, int max_length);

// The word s_{i_1}...s_{i_N} is read from i_N to i_1, each letter following a
// reversed arrow of that type starting at e. Empty jprime selects the affine
// Grassmannian automaton given by Gamma_rho.
bool automaton_accepts(const AffineCartanData& d, const std::vector<int>& jprime, const Word& word);
// counts[l] = number of accepted words of length l, for l = 0..max_length.
std::vector<long long> enumerate_reduced(const AffineCartanData& d, const std::vector<int>& jprime, int max_length);
// Same counts from the affine Grassmannian elements found by breadth-first search.
std::vector<long long> count_reduced_words_oracle(const AffineCartanData& d, const std::vector<int>& jprime,
                                                  int max_length);

struct StructureEntry {
    int j = 0, k = 0, i = 0;  // xi_{w_j} xi_{w_k} contains coefficient * xi_{w_i}
    LaurentPoly coefficient;
};
struct StructureTable {
    std::vector<std::string> words;
    std::vector<std::string> legend;
    Verdict verdict = Verdict::not_multiplicative;
    std::vector<StructureEntry> entries;  // nonzero constants, ordered by (j, k, i)
};
StructureTable structure_constants(const GammaGraph& g);

}  // namespace affgraph
