#pragma once

#include <string>
#include <vector>

#include "affgraph/cartan.hpp"

namespace affgraph {

using Word = std::vector<int>;

// Finite Weyl group element stored through its action on the simple roots.
// Column j of `action` is u(alpha_j) in simple-root coordinates.
struct WeylElement {
    IntMat action;
    IntMat inverse_action;
    int cached_length = -1;

    bool operator==(const WeylElement& o) const { return action == o.action; }
    bool operator<(const WeylElement& o) const { return action < o.action; }
};

WeylElement weyl_identity(const AffineCartanData& d);
WeylElement simple_reflection(const AffineCartanData& d, int i);  // 1 <= i <= n
WeylElement reflection(const AffineCartanData& d, int root_index);  // s_beta for a positive root
WeylElement multiply(const AffineCartanData& d, const WeylElement& u, const WeylElement& v);
WeylElement inverse(const WeylElement& u);
WeylElement from_word(const AffineCartanData& d, const Word& word);  // s_{w1} s_{w2} ...

IntVec apply_root(const WeylElement& u, const IntVec& root);
IntVec apply_coroot(const AffineCartanData& d, const WeylElement& u, const IntVec& coroot);
RatVec apply_omega(const WeylElement& u, const RatVec& x);
IntVec apply_omega(const WeylElement& u, const IntVec& x);

bool is_negative(const IntVec& root);
int length(const AffineCartanData& d, const WeylElement& u);
bool is_left_descent(const WeylElement& u, int i);   // l(s_i u) < l(u)
bool is_right_descent(const WeylElement& u, int i);  // l(u s_i) < l(u)
Word reduced_word(const AffineCartanData& d, const WeylElement& u);

std::vector<WeylElement> enumerate_group(const AffineCartanData& d);
std::vector<WeylElement> enumerate_parabolic(const AffineCartanData& d, const std::vector<int>& J);

// Minimal representative of the left coset u W_J.
WeylElement min_coset_rep(const AffineCartanData& d, const WeylElement& u, const std::vector<int>& J);
bool in_WJ(const WeylElement& u, const std::vector<int>& J);
std::vector<WeylElement> enumerate_WJ(const AffineCartanData& d, const std::vector<int>& J);

// J = I* minus J'
std::vector<int> complement(const AffineCartanData& d, const std::vector<int>& jprime);

// "e" for the empty word, otherwise the digits "121"
std::string word_string(const Word& w);
Word parse_word(const std::string& s);

}  // namespace affgraph
