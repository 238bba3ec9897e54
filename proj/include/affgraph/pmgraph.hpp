#pragma once

#include <array>
#include <string>
#include <vector>

#include "affgraph/laurent.hpp"

namespace affgraph {

constexpr int kUntyped = -1;

struct Edge {
    int src = 0;
    int dst = 0;
    int type = kUntyped;
    LaurentPoly weight;
};

// Directed graph with Laurent-polynomial weights. The adjacency matrix follows
// the column convention: A[i][j] is the total weight of the edges v_j -> v_i.
class WeightedDigraph {
public:
    explicit WeightedDigraph(int nvars = 0) : nvars_(nvars) {}

    int add_vertex(const std::string& label);
    // Throws unless the weight is nonzero with nonnegative coefficients.
    void add_edge(int src, int dst, int type, const LaurentPoly& weight);

    int size() const { return static_cast<int>(labels_.size()); }
    int nvars() const { return nvars_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }
    int find(const std::string& label) const;  // -1 when absent
    const std::vector<Edge>& edges() const { return edges_; }

    std::vector<std::vector<LaurentPoly>> adjacency_laurent() const;
    FFMatrix adjacency() const;
    // Every multi-term weight becomes parallel single-monomial edges.
    WeightedDigraph split_monomials() const;

private:
    int nvars_;
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
};

// Columns e_k, A e_k, ..., A^{n-1} e_k.
FFMatrix path_matrix(const WeightedDigraph& g, int k);

enum class Verdict { positively_multiplicative, multiplicative_not_positive, not_multiplicative };
std::string verdict_name(Verdict v);

struct PMCertificate {
    int base = 0;
    Verdict verdict = Verdict::not_multiplicative;
    std::string reason;
    // basis[k] = b_k, so the structure constant c_{jk}^i is entry (i, k) of b_j
    std::vector<FFMatrix> basis;
    std::vector<RationalFunction> kernel;  // path-matrix kernel vector when not multiplicative
    int minimal_polynomial_degree = 0;
    bool used_interpolation = false;
    // false when the verdict only records that no basis was found
    bool conclusive = true;
    std::array<int, 3> offending{-1, -1, -1};  // (j, k, i) of a failing constant

    const RationalFunction& constant(int j, int k, int i) const { return basis.at(j)(i, k); }
};

struct CertificateOptions {
    // Try sparse modular interpolation with exact verification before the
    // fraction-field inverse.
    bool allow_interpolation = true;
};

PMCertificate multiplicative_basis_at(const WeightedDigraph& g, int i0, const CertificateOptions& opts = {});

struct ExpansionNode {
    int vertex = 0;
    Monomial shift;
    int level = 1;
};
struct Expansion {
    WeightedDigraph graph;  // scalar weights; each edge keeps the type of its arrow
    std::vector<ExpansionNode> nodes;
};
// Requires monomial weights; levels run from 1 to depth.
Expansion expand(const WeightedDigraph& g, int root, int depth);

struct IsoOptions {
    bool respect_types = true;
    bool respect_weights = true;
};
struct IsoResult {
    bool isomorphic = false;
    std::vector<int> mapping;  // vertex of the first graph -> vertex of the second
};
IsoResult typed_isomorphic(const WeightedDigraph& a, const WeightedDigraph& b, const IsoOptions& opts = {});

// Three-state automaton of the rank-two dihedral example: v1 -a-> v2,
// v1 -b-> v3, v3 -d-> v2, v2 -c-> v3 with constant weights.
WeightedDigraph dihedral_automaton(long a, long b, long c, long d);

}  // namespace affgraph
