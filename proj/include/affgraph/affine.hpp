#pragma once

#include <string>
#include <utility>
#include <vector>

#include "affgraph/weyl.hpp"

namespace affgraph {

// w = finite * t_trans with trans in simple-coroot coordinates.
// Product: (u1, l1)(u2, l2) = (u1 u2, u2^{-1}(l1) + l2).
// Alcoves: A_0 w is the image of A_0 under x -> u^{-1}(x) + trans.
struct AffineElement {
    WeylElement finite;
    IntVec trans;

    bool operator==(const AffineElement& o) const { return finite == o.finite && trans == o.trans; }
    bool operator<(const AffineElement& o) const {
        if (!(finite == o.finite)) return finite < o.finite;
        return trans < o.trans;
    }
};

// k_alpha = floor((p_w, alpha)), indexed like AffineCartanData::positive_roots.
using AlcoveCoords = IntVec;

enum class Crossing { positive, negative };

AffineElement aff_identity(const AffineCartanData& d);
AffineElement aff_generator(const AffineCartanData& d, int i);  // 0 <= i <= n
AffineElement aff_multiply(const AffineCartanData& d, const AffineElement& a, const AffineElement& b);
AffineElement aff_inverse(const AffineCartanData& d, const AffineElement& a);
AffineElement aff_from_word(const AffineCartanData& d, const Word& word);
AffineElement translation(const AffineCartanData& d, const IntVec& coroot);
AffineElement finite_part(const AffineCartanData& d, const WeylElement& u);
// s_{beta,k}: reflection in the hyperplane (x, beta) = k
AffineElement affine_reflection(const AffineCartanData& d, int root_index, long long k);

// Sample point of A_0, scaled: point = coords / scale, coords in omega-coordinates.
struct ScaledPoint {
    IntVec coords;
    long long scale = 1;
};
ScaledPoint sample_point(const AffineCartanData& d);
ScaledPoint sample_image(const AffineCartanData& d, const AffineElement& w);

AlcoveCoords alcove_coordinates(const AffineCartanData& d, const AffineElement& w);
int length_affine(const AffineCartanData& d, const AffineElement& w);
Crossing crossing_sign(const AffineCartanData& d, const AffineElement& w, int i);
Word aff_reduced_word(const AffineCartanData& d, const AffineElement& w);

bool is_grassmannian(const AffineCartanData& d, const AffineElement& w);
// ordered by (length, lexicographic reduced word)
std::vector<AffineElement> enumerate_grassmannians_up_to(const AffineCartanData& d, int max_length);

// Positive roots supported on J (indices into positive_roots).
std::vector<int> parabolic_roots(const AffineCartanData& d, const std::vector<int>& J);
bool in_J_alcove(const AffineCartanData& d, const AffineElement& w, const std::vector<int>& J);

// Alcove A_0 w + mu, mu in omega-coordinates with integer entries.
AffineElement star_translate(const AffineCartanData& d, const AffineElement& w, const IntVec& mu);
// Same, also reporting the wall word used by the localization.
std::pair<AffineElement, Word> star_translate_traced(const AffineCartanData& d, const AffineElement& w,
                                                     const IntVec& mu);

AffineElement project_to_J_alcove(const AffineCartanData& d, const AffineElement& x, const std::vector<int>& J);

// Class in Q^vee / Q_J^vee: coroot coordinates at the J' positions (increasing order).
IntVec coroot_class(const AffineCartanData& d, const IntVec& coroot, const std::vector<int>& J);
IntVec lift_class(const AffineCartanData& d, const IntVec& cls, const std::vector<int>& J);

AffineElement bullet_translate(const AffineCartanData& d, const AffineElement& u, const IntVec& cls,
                               const std::vector<int>& J);
WeylElement vJ(const AffineCartanData& d, const IntVec& coroot, const std::vector<int>& J);

// Inverse of (u, class) -> u . t_class on A_J.
struct UJFactor {
    WeylElement u;  // in W^J
    IntVec cls;
};
UJFactor uj_decompose(const AffineCartanData& d, const AffineElement& x, const std::vector<int>& J);

// All alcoves with |k_alpha| <= bound for every positive root.
std::vector<AffineElement> enumerate_window(const AffineCartanData& d, long long bound);

std::string aff_word_string(const AffineCartanData& d, const AffineElement& w);

}  // namespace affgraph
