#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affgraph {

using Rational = mpq_class;

// Exponent vector of a Laurent monomial. Only the first `nvars` slots are used;
// the remaining slots stay zero so that comparisons ignore them.
constexpr int kMaxVars = 8;

struct Monomial {
    std::array<std::int32_t, kMaxVars> e{};

    int& operator[](int i) { return e[i]; }
    int operator[](int i) const { return e[i]; }
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

    static Monomial from(const std::vector<int>& v);
    std::vector<int> to_vector(int nvars) const;
    Monomial operator+(const Monomial& o) const;
    Monomial operator-(const Monomial& o) const;
    Monomial operator-() const;
};

class LaurentPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars);

    static LaurentPoly constant(int nvars, const Rational& c);
    static LaurentPoly monomial(int nvars, const Monomial& m, const Rational& c = 1);
    static LaurentPoly monomial(const std::vector<int>& exps, const Rational& c = 1);
    // z_i as a polynomial in nvars variables
    static LaurentPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // every coefficient is >= 0
    bool is_nonnegative() const;

    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    // leading term in lexicographic order (largest exponent)
    const Term& leading() const { return terms_.back(); }

    void add_term(const Monomial& m, const Rational& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(const Monomial& m) const;
    LaurentPoly pow(unsigned k) const;

    // z^a -> z^{-a}
    LaurentPoly bar() const;
    // componentwise minimum / maximum exponents; zero polynomial gives zeros
    Monomial min_exponents() const;
    Monomial max_exponents() const;

    bool operator==(const LaurentPoly& o) const = default;

    // "3*z1^2*z2^-1 + z3"; names default to z1..zn
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_same(const LaurentPoly& o) const;

    int nvars_ = 0;
    std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
};

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("not divisible") {}
};

LaurentPoly lp_multiply(const LaurentPoly& p, const LaurentPoly& q);
// r with r*q == p, or std::nullopt
std::optional<LaurentPoly> lp_divide_exact(const LaurentPoly& p, const LaurentPoly& q);

class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(int nvars);
    RationalFunction(LaurentPoly num);  // NOLINT: implicit promotion is intended
    RationalFunction(LaurentPoly num, LaurentPoly den);

    static RationalFunction constant(int nvars, const Rational& c);

    int nvars() const { return num_.nvars(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    // den is a monomial (so the value is a Laurent polynomial)
    bool is_laurent() const { return den_.is_monomial(); }
    std::optional<LaurentPoly> as_laurent() const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    RationalFunction bar() const;

    // cross-multiplication equality
    bool operator==(const RationalFunction& o) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

class FFMatrix {
public:
    FFMatrix() = default;
    FFMatrix(int rows, int cols, int nvars);

    static FFMatrix identity(int n, int nvars);
    static FFMatrix from_laurent(const std::vector<std::vector<LaurentPoly>>& rows, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    RationalFunction& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const RationalFunction& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    FFMatrix operator+(const FFMatrix& o) const;
    FFMatrix operator-(const FFMatrix& o) const;
    FFMatrix operator*(const FFMatrix& o) const;
    FFMatrix scaled(const RationalFunction& c) const;
    FFMatrix transpose() const;
    FFMatrix bar() const;
    bool operator==(const FFMatrix& o) const;

    bool is_zero() const;
    bool is_identity() const;
    std::vector<RationalFunction> column(int j) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    int nvars_ = 0;
    std::vector<RationalFunction> a_;
};

struct InverseResult {
    bool invertible = false;
    FFMatrix inverse;                     // set when invertible
    std::vector<RationalFunction> kernel;  // nonzero kernel vector when singular
};

InverseResult mat_inverse(const FFMatrix& m);
RationalFunction determinant(const FFMatrix& m);

// Solve M x = b; nullopt when M is singular or the system is inconsistent.
std::optional<std::vector<RationalFunction>> solve(const FFMatrix& m,
                                                   const std::vector<RationalFunction>& b);

// Coefficients c_0..c_d of the monic minimal polynomial, c_d = 1.
std::vector<RationalFunction> minimal_polynomial(const FFMatrix& a);

// Evaluate p(A) for p given by coefficients in increasing degree.
FFMatrix evaluate_polynomial(const std::vector<RationalFunction>& coeffs, const FFMatrix& a);

std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace affgraph
