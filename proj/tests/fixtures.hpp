#pragma once

// Printed matrices used as golden data by several test binaries.

#include <string>
#include <vector>

#include "poly_parse.hpp"

namespace fixtures {

using Grid = std::vector<std::vector<std::string>>;

// Six-vertex example graph in three variables.
inline const Grid kSixAdjacency = {
    {"0", "0", "z1", "z3", "z2", "0"},
    {"1", "0", "0", "0", "0", "z2"},
    {"0", "1", "0", "0", "0", "z3"},
    {"0", "1", "0", "0", "0", "z1"},
    {"0", "0", "1", "1", "0", "0"},
    {"0", "0", "0", "0", "1", "0"},
};

inline const Grid kSixM1 = {
    {"1", "0", "0", "z1+z3", "2*z2", "0"},
    {"0", "1", "0", "0", "z1+z3", "4*z2"},
    {"0", "0", "1", "0", "0", "z1+3*z3"},
    {"0", "0", "1", "0", "0", "3*z1+z3"},
    {"0", "0", "0", "2", "0", "0"},
    {"0", "0", "0", "0", "2", "0"},
};

inline const Grid kSixM1Inverse = {
    {"1", "0", "0", "0", "-(z1+z3)/2", "-z2"},
    {"0", "1", "2*z2/(z1-z3)", "2*z2/(z3-z1)", "0", "-(z1+z3)/2"},
    {"0", "0", "(3*z1+z3)/(2*z1-2*z3)", "(z1+3*z3)/(2*z3-2*z1)", "0", "0"},
    {"0", "0", "0", "0", "1/2", "0"},
    {"0", "0", "0", "0", "0", "1/2"},
    {"0", "0", "-1/(2*z1-2*z3)", "-1/(2*z3-2*z1)", "0", "0"},
};

inline const Grid kSixB3 = {
    {"0", "z1", "z2", "0", "0", "z1*z3"},
    {"0", "0", "z1", "0", "z2", "0"},
    {"1", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "z1", "z2"},
    {"0", "1", "0", "0", "0", "z1"},
    {"0", "0", "0", "1", "0", "0"},
};

// mu(T) = T^6 - 2(z1+z3)T^3 - 4 z2 T^2 + (z1-z3)^2, increasing degree
inline const std::vector<std::string> kSixMinimalPolynomial = {
    "(z1-z3)*(z1-z3)", "0", "-4*z2", "-2*(z1+z3)", "0", "0", "1"};

}  // namespace fixtures
