#pragma once

#include <string>
#include <vector>

#include "affgraph/gamma.hpp"
#include "affgraph/particles.hpp"

namespace affgraph {

// A graph together with everything needed to print it: the variable legend,
// a word per vertex and a few descriptive fields.
struct GraphDocument {
    std::string model = "root-datum";  // root-datum | particle | tableau | automaton
    std::string graph;                 // rho, gamma, B0, ...
    std::string type;                  // "A2", "G2", ... or empty
    std::vector<int> jprime;
    std::vector<std::string> legend;   // legend[k] describes z_{k+1}
    std::vector<std::string> words;    // one per vertex
    WeightedDigraph digraph;
};

GraphDocument document_of(const AffineCartanData& d, const GammaGraph& g);
GraphDocument document_of(const AffineCartanData& d, const std::vector<int>& jprime, const ParticleGraph& p);
GraphDocument document_of(const AffineCartanData& d, const std::vector<int>& jprime, const TableauGraph& t);

// {model, graph, type, jprime, nvars, legend: {z1: ...}, vertices: [{id, word, label}],
//  edges: [{src, dst, type, weight: [{exps, coef}]}]}, coefficients as "p/q" strings.
std::string to_json(const GraphDocument& doc);
// Throws std::invalid_argument on malformed input.
GraphDocument from_json(const std::string& text);

std::string to_dot(const GraphDocument& doc);
// One edge per line: src,dst,type,weight.
std::string to_csv(const GraphDocument& doc);

// "[[a11, a12], [a21, a22]]" with entries printed in the legend-free names z1..zn.
std::string matrix_string(const std::vector<std::vector<LaurentPoly>>& m);

std::string structure_table_csv(const StructureTable& t);
std::string structure_table_json(const StructureTable& t);

}  // namespace affgraph
