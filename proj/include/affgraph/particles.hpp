#pragma once

#include <string>
#include <vector>

#include "affgraph/gamma.hpp"

namespace affgraph {

// Affine permutations in window notation. Type A_n: (i + n + 1)w = (i)w + n + 1,
// window (1)w .. (n+1)w. Type C_n: (-i)w = -(i)w and (i + 2n + 1)w = (i)w + 2n + 1,
// window (1)w .. (n)w. Left multiplication by a generator acts on positions.
struct TypeAWindow {
    IntVec window;
    bool operator==(const TypeAWindow&) const = default;
};
struct TypeCWindow {
    IntVec window;
    bool operator==(const TypeCWindow&) const = default;
};

TypeAWindow windowA_of(const AffineCartanData& d, const AffineElement& w);
AffineElement element_of_windowA(const AffineCartanData& d, const TypeAWindow& win);
TypeAWindow windowA_generator_action(int i, const TypeAWindow& win);
bool windowA_valid(const TypeAWindow& win);

TypeCWindow windowC_of(const AffineCartanData& d, const AffineElement& w);
AffineElement element_of_windowC(const AffineCartanData& d, const TypeCWindow& win);
TypeCWindow windowC_generator_action(int i, const TypeCWindow& win);
bool windowC_valid(const TypeCWindow& win);

std::string window_string(const IntVec& win);

// spins[k] is -1 or +1, or 0 for an unsigned letter (type A, and the
// self-dual block of type C).
struct ColorWord {
    std::vector<int> colors;
    std::vector<int> spins;
    bool operator==(const ColorWord&) const = default;
    auto operator<=>(const ColorWord&) const = default;
    std::string str() const;
};

// Orbits of W_J on the window values, ordered by their smallest element.
// colors[v - 1] is the colour of value v. In type C a block and its mirror
// share a colour; self_dual_color is the colour of the block equal to its own
// mirror, or 0 when there is none.
struct ColorModel {
    TypeLabel type = TypeLabel::A;
    int rank = 0;
    std::vector<int> jprime;
    std::vector<std::vector<int>> blocks;
    std::vector<int> colors;
    int num_colors = 0;
    int self_dual_color = 0;
    std::vector<int> multiplicity;  // letters of each colour in a word, indexed from 1
};

ColorModel color_model(const AffineCartanData& d, const std::vector<int>& jprime);
ColorWord color_word_of(const ColorModel& m, const AffineCartanData& d, const WeylElement& u);

struct ParticleGraph {
    WeightedDigraph graph;  // variables as in build_gamma_gamma
    std::vector<ColorWord> words;
    std::vector<std::string> legend;
    int vertex_of(const ColorWord& w) const;  // -1 when absent
};

// Colour words with swap and wrap-around rules. Throws std::invalid_argument
// outside types A and C.
ParticleGraph build_particle_graph(const AffineCartanData& d, const std::vector<int>& jprime);

struct ModelReport {
    bool isomorphic = false;  // typed_isomorphic with types and weights
    bool map_is_isomorphism = false;  // u -> colour word of u
    std::string detail;
    bool passed() const { return isomorphic && map_is_isomorphism; }
};
ModelReport verify_particle_model(const AffineCartanData& d, const std::vector<int>& jprime);

// Columns are sorted, listed from the longest to the shortest.
struct KeyTableau {
    std::vector<std::vector<int>> columns;
    bool operator==(const KeyTableau&) const = default;
    auto operator<=>(const KeyTableau&) const = default;
    std::string str() const;
};

bool is_key_tableau(const KeyTableau& t, int max_entry);
// Column lengths are the entries of jprime, filled with 1..length.
KeyTableau key_highest(const AffineCartanData& d, const std::vector<int>& jprime);
// Type A only.
KeyTableau key_action(const AffineCartanData& d, const KeyTableau& t, int i);

struct TableauGraph {
    WeightedDigraph graph;  // no variables, every weight is 1
    std::vector<KeyTableau> tableaux;
};
// Orbit of key_highest under key_action. The arrow of type i >= 1 points from
// T to s_i T when entries i become i + 1; the arrow of type 0 when n + 1
// becomes 1.
TableauGraph key_orbit_graph(const AffineCartanData& d, const std::vector<int>& jprime);

}  // namespace affgraph
