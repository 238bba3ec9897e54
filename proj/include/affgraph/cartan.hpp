#pragma once

#include <string>
#include <vector>

#include "affgraph/laurent.hpp"

namespace affgraph {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

enum class TypeLabel { A, B, C, D, G2 };

std::string type_name(TypeLabel t);
TypeLabel parse_type_label(const std::string& s);

struct RootVector {
    IntVec coords;
    bool is_coroot = false;
    bool operator==(const RootVector&) const = default;
};

// Point of V in the basis dual to the simple roots: coords[j] = (x, alpha_j).
struct GeoWeight {
    RatVec coords;
    bool operator==(const GeoWeight&) const = default;
};

struct AffineCartanData {
    TypeLabel type_label = TypeLabel::A;
    int rank = 0;
    IntMat affine_cartan;  // (n+1)x(n+1), index 0 is the affine node
    IntMat finite_cartan;  // a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i), 0-based i,j < n
    IntVec marks;          // a_0..a_n
    IntVec comarks;        // a_0^vee..a_n^vee
    RatMat gram;           // (alpha_i, alpha_j), long roots of squared length 2
    RatMat finite_cartan_inverse;

    // Derived root-system tables.
    std::vector<IntVec> positive_roots;    // simple-root coordinates
    std::vector<IntVec> positive_coroots;  // simple-coroot coordinates of alpha^vee
    std::vector<int> root_height;
    int theta_index = -1;
    IntVec theta;                 // highest root, root coordinates
    IntVec theta_coroot;          // theta^vee, coroot coordinates
    IntVec length_scaled;         // integers proportional to (alpha_i, alpha_i)

    std::string name() const;
    int num_positive() const { return static_cast<int>(positive_roots.size()); }
    int root_index(const IntVec& coords) const;  // -1 when absent
};

AffineCartanData build_affine_data(TypeLabel type, int rank);
AffineCartanData build_affine_data(const std::string& type, int rank);

const std::vector<IntVec>& positive_roots(const AffineCartanData& d);
RootVector highest_root(const AffineCartanData& d);
RootVector coroot_of(const AffineCartanData& d, const RootVector& root);

// (x, y) for roots, coroots and geometric weights; y must be a root.
Rational pairing(const AffineCartanData& d, const RootVector& x, const RootVector& y);
Rational pairing(const AffineCartanData& d, const GeoWeight& x, const RootVector& y);

GeoWeight fundamental_weight(const AffineCartanData& d, int i);  // 1-based i
GeoWeight to_geo(const AffineCartanData& d, const RootVector& x);

// omega-coordinates of a coroot vector: ((c, alpha_j))_j = sum_i c_i a_ij
IntVec coroot_to_omega(const AffineCartanData& d, const IntVec& coroot);
// inverse of coroot_to_omega; throws when the weight is not in Q^vee
IntVec omega_to_coroot(const AffineCartanData& d, const IntVec& omega);
bool omega_in_coroot_lattice(const AffineCartanData& d, const IntVec& omega);

// Exact rational inverse of a square integer matrix.
RatMat rational_inverse(const IntMat& m);

}  // namespace affgraph
