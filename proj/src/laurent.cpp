#include "affgraph/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace affgraph {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from(const std::vector<int>& v) {
    if (v.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
    Monomial m;
    for (std::size_t i = 0; i < v.size(); ++i) m.e[i] = v[i];
    return m;
}

std::vector<int> Monomial::to_vector(int nvars) const { return {e.begin(), e.begin() + nvars}; }

Monomial Monomial::operator+(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

Monomial Monomial::operator-(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
    return r;
}

Monomial Monomial::operator-() const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = -e[i];
    return r;
}

namespace {

bool divides(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported number of variables");
}

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace_back(Monomial{}, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const Monomial& m, const Rational& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const std::vector<int>& exps, const Rational& c) {
    return monomial(static_cast<int>(exps.size()), Monomial::from(exps), c);
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    Monomial m;
    m.e[i] = 1;
    return monomial(nvars, m);
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == Monomial{} && terms_[0].second == 1;
}

bool LaurentPoly::is_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return sgn(t.second) >= 0; });
}

Rational LaurentPoly::constant_term() const { return coefficient(Monomial{}); }

Rational LaurentPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first < k; });
    if (it != terms_.end() && it->first == m) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.emplace(it, m, c);
    }
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Laurent polynomials over different variable sets");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same(o);
    LaurentPoly r(nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            r.terms_.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same(o);
    if (terms_.empty() || o.terms_.empty()) return LaurentPoly(nvars_);
    if (o.terms_.size() == 1) return shifted(o.terms_[0].first).scaled(o.terms_[0].second);
    if (terms_.size() == 1) return o.shifted(terms_[0].first).scaled(terms_[0].second);
    std::vector<Term> raw;
    raw.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) raw.emplace_back(ma + mb, ca * cb);
    std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    LaurentPoly r(nvars_);
    for (auto& t : raw) {
        if (!r.terms_.empty() && r.terms_.back().first == t.first) {
            r.terms_.back().second += t.second;
        } else {
            if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
            r.terms_.push_back(std::move(t));
        }
    }
    if (!r.terms_.empty() && r.terms_.back().second == 0) r.terms_.pop_back();
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = *this + o; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = *this - o; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c == 0) return LaurentPoly(nvars_);
    LaurentPoly r = *this;
    if (c != 1)
        for (auto& t : r.terms_) t.second *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first = t.first + m;
    return r;  // translation preserves the lexicographic order
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r = constant(nvars_, 1);
    LaurentPoly b = *this;
    while (k) {
        if (k & 1U) r *= b;
        k >>= 1U;
        if (k) b *= b;
    }
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
    return r;
}

Monomial LaurentPoly::min_exponents() const {
    if (terms_.empty()) return {};
    Monomial m = terms_[0].first;
    for (const auto& t : terms_)
        for (int i = 0; i < nvars_; ++i) m.e[i] = std::min(m.e[i], t.first.e[i]);
    return m;
}

Monomial LaurentPoly::max_exponents() const {
    if (terms_.empty()) return {};
    Monomial m = terms_[0].first;
    for (const auto& t : terms_)
        for (int i = 0; i < nvars_; ++i) m.e[i] = std::max(m.e[i], t.first.e[i]);
    return m;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print from the largest term down
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool is_unit = m == Monomial{};
        bool wrote = false;
        if (a != 1 || is_unit) {
            os << rational_to_string(a);
            wrote = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (m.e[i] == 0) continue;
            if (wrote) os << "*";
            os << (i < static_cast<int>(names.size()) ? names[i] : "z" + std::to_string(i + 1));
            if (m.e[i] != 1) os << "^" << m.e[i];
            wrote = true;
        }
    }
    return os.str();
}

LaurentPoly lp_multiply(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

std::optional<LaurentPoly> lp_divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (p.nvars() != q.nvars()) throw std::invalid_argument("Laurent polynomials over different variable sets");
    const int n = p.nvars();
    if (p.is_zero()) return LaurentPoly(n);
    if (q.is_monomial()) {
        const auto& [m, c] = q.terms()[0];
        return p.shifted(-m).scaled(1 / c);
    }
    // Move both into the polynomial range; q' then has no monomial factor, so
    // q | p in the Laurent ring iff q' | p' in the polynomial ring.
    Monomial sp = p.min_exponents();
    Monomial sq = q.min_exponents();
    LaurentPoly rem = p.shifted(-sp);
    LaurentPoly d = q.shifted(-sq);
    const auto& [lm, lc] = d.leading();
    LaurentPoly quot(n);
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        if (!divides(lm, rm)) return std::nullopt;
        LaurentPoly t = LaurentPoly::monomial(n, rm - lm, rc / lc);
        quot += t;
        rem -= t * d;
    }
    return quot.shifted(sp - sq);
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(int nvars) : num_(nvars), den_(LaurentPoly::constant(nvars, 1)) {}

RationalFunction::RationalFunction(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(num_.nvars(), 1)) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

RationalFunction RationalFunction::constant(int nvars, const Rational& c) {
    return RationalFunction(LaurentPoly::constant(nvars, c));
}

void RationalFunction::normalize() {
    const int n = den_.nvars();
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(n, 1);
        return;
    }
    if (den_.is_monomial()) {
        const auto& [m, c] = den_.terms()[0];
        num_ = num_.shifted(-m).scaled(1 / c);
        den_ = LaurentPoly::constant(n, 1);
        return;
    }
    Monomial s = den_.min_exponents();
    Rational lc = den_.leading().second;
    den_ = den_.shifted(-s).scaled(1 / lc);
    num_ = num_.shifted(-s).scaled(1 / lc);
    if (auto q = lp_divide_exact(num_, den_)) {
        num_ = std::move(*q);
        den_ = LaurentPoly::constant(n, 1);
        return;
    }
    if (!num_.is_monomial() && num_.size() <= den_.size()) {
        if (auto q = lp_divide_exact(den_, num_)) {
            // num | den: value is 1/q
            LaurentPoly one = LaurentPoly::constant(n, 1);
            num_ = one;
            den_ = std::move(*q);
            normalize();
        }
    }
}

bool RationalFunction::is_one() const { return num_.is_one() && den_.is_one(); }

std::optional<LaurentPoly> RationalFunction::as_laurent() const {
    if (den_.is_monomial()) {
        const auto& [m, c] = den_.terms()[0];
        return num_.shifted(-m).scaled(1 / c);
    }
    return lp_divide_exact(num_, den_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction(nvars());
    if (den_.is_one() && o.den_.is_one()) return RationalFunction(num_ * o.num_);
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::bar() const { return RationalFunction(num_.bar(), den_.bar()); }

bool RationalFunction::operator==(const RationalFunction& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const {
    if (den_.is_one()) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

// ---------------------------------------------------------------- FFMatrix

FFMatrix::FFMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      a_(static_cast<std::size_t>(rows) * cols, RationalFunction(nvars)) {}

FFMatrix FFMatrix::identity(int n, int nvars) {
    FFMatrix m(n, n, nvars);
    for (int i = 0; i < n; ++i) m(i, i) = RationalFunction::constant(nvars, 1);
    return m;
}

FFMatrix FFMatrix::from_laurent(const std::vector<std::vector<LaurentPoly>>& rows, int nvars) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    FFMatrix m(r, c, nvars);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = RationalFunction(rows[i][j]);
    return m;
}

FFMatrix FFMatrix::operator+(const FFMatrix& o) const {
    FFMatrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

FFMatrix FFMatrix::operator-(const FFMatrix& o) const {
    FFMatrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
}

FFMatrix FFMatrix::operator*(const FFMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    FFMatrix r(rows_, o.cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const auto& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const auto& y = o(k, j);
                if (!y.is_zero()) r(i, j) += x * y;
            }
        }
    return r;
}

FFMatrix FFMatrix::scaled(const RationalFunction& c) const {
    FFMatrix r = *this;
    for (auto& x : r.a_) x = x * c;
    return r;
}

FFMatrix FFMatrix::transpose() const {
    FFMatrix r(cols_, rows_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

FFMatrix FFMatrix::bar() const {
    FFMatrix r = *this;
    for (auto& x : r.a_) x = x.bar();
    return r;
}

bool FFMatrix::operator==(const FFMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (!(a_[k] == o.a_[k])) return false;
    return true;
}

bool FFMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const RationalFunction& x) { return x.is_zero(); });
}

bool FFMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const auto& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

std::vector<RationalFunction> FFMatrix::column(int j) const {
    std::vector<RationalFunction> v;
    v.reserve(rows_);
    for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

// ---------------------------------------------------------------- elimination

namespace {

using RFGrid = std::vector<std::vector<RationalFunction>>;

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<int> rref(RFGrid& g, int ncols_to_pivot) {
    const int rows = static_cast<int>(g.size());
    const int cols = rows ? static_cast<int>(g[0].size()) : 0;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < ncols_to_pivot && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!g[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(g[r], g[p]);
        RationalFunction inv = RationalFunction::constant(g[r][c].nvars(), 1) / g[r][c];
        for (int j = c; j < cols; ++j)
            if (!g[r][j].is_zero()) g[r][j] = g[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || g[i][c].is_zero()) continue;
            RationalFunction f = g[i][c];
            for (int j = c; j < cols; ++j)
                if (!g[r][j].is_zero()) g[i][j] -= f * g[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

RFGrid to_grid(const FFMatrix& m) {
    RFGrid g(m.rows(), std::vector<RationalFunction>(m.cols(), RationalFunction(m.nvars())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
    return g;
}

bool all_laurent(const FFMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).den().is_one()) return false;
    return true;
}

// Fraction-free Gauss-Jordan over the Laurent ring. Returns nullopt when the
// matrix is singular or an intermediate division unexpectedly fails.
std::optional<FFMatrix> bareiss_inverse(const FFMatrix& m) {
    const int n = m.rows();
    const int nv = m.nvars();
    std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(2 * n, LaurentPoly(nv)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m(i, j).num();
        a[i][n + i] = LaurentPoly::constant(nv, 1);
    }
    LaurentPoly prev = LaurentPoly::constant(nv, 1);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!a[i][k].is_zero()) {
                // prefer the sparsest pivot to limit growth
                if (p < 0 || a[i][k].size() < a[p][k].size()) p = i;
            }
        if (p < 0) return std::nullopt;
        std::swap(a[k], a[p]);
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            for (int j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                LaurentPoly v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                auto q = lp_divide_exact(v, prev);
                if (!q) return std::nullopt;
                a[i][j] = std::move(*q);
            }
            a[i][k] = LaurentPoly(nv);
        }
        prev = a[k][k];
    }
    FFMatrix inv(n, n, nv);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = RationalFunction(a[i][n + j], a[i][i]);
    return inv;
}

}  // namespace

InverseResult mat_inverse(const FFMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const int n = m.rows();
    InverseResult res;
    if (all_laurent(m)) {
        if (auto inv = bareiss_inverse(m)) {
            res.invertible = true;
            res.inverse = std::move(*inv);
            return res;
        }
    }
    RFGrid g = to_grid(m);
    for (int i = 0; i < n; ++i) {
        g[i].resize(2 * n, RationalFunction(m.nvars()));
        g[i][n + i] = RationalFunction::constant(m.nvars(), 1);
    }
    std::vector<int> piv = rref(g, n);
    if (static_cast<int>(piv.size()) == n) {
        res.invertible = true;
        res.inverse = FFMatrix(n, n, m.nvars());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) res.inverse(i, j) = g[i][n + j];
        return res;
    }
    // Singular: read a kernel vector off the reduced form of m alone.
    RFGrid h = to_grid(m);
    piv = rref(h, n);
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    const int free_col = static_cast<int>(std::find(is_pivot.begin(), is_pivot.end(), false) - is_pivot.begin());
    res.kernel.assign(n, RationalFunction(m.nvars()));
    res.kernel[free_col] = RationalFunction::constant(m.nvars(), 1);
    for (std::size_t r = 0; r < piv.size(); ++r) res.kernel[piv[r]] = -h[r][free_col];
    return res;
}

RationalFunction determinant(const FFMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    RFGrid g = to_grid(m);
    const int n = m.rows();
    RationalFunction det = RationalFunction::constant(m.nvars(), 1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!g[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return RationalFunction(m.nvars());
        if (p != c) {
            std::swap(g[p], g[c]);
            det = -det;
        }
        det = det * g[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (g[i][c].is_zero()) continue;
            RationalFunction f = g[i][c] / g[c][c];
            for (int j = c; j < n; ++j)
                if (!g[c][j].is_zero()) g[i][j] -= f * g[c][j];
        }
    }
    return det;
}

std::optional<std::vector<RationalFunction>> solve(const FFMatrix& m, const std::vector<RationalFunction>& b) {
    const int rows = m.rows();
    const int cols = m.cols();
    RFGrid g = to_grid(m);
    for (int i = 0; i < rows; ++i) g[i].push_back(b[i]);
    std::vector<int> piv = rref(g, cols + 1);
    if (static_cast<int>(piv.size()) < cols) return std::nullopt;
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    std::vector<RationalFunction> x(cols, RationalFunction(m.nvars()));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = g[r][cols];
    return x;
}

std::vector<RationalFunction> minimal_polynomial(const FFMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("minimal polynomial of a non-square matrix");
    const int n = a.rows();
    const int nv = a.nvars();
    const int n2 = n * n;
    // Incremental elimination: rows are the vectorized powers, kept in echelon form
    // together with the combination of powers that produced them.
    std::vector<std::vector<RationalFunction>> basis;  // echelon rows (length n2)
    std::vector<std::vector<RationalFunction>> combo;  // coefficients on I, A, A^2, ...
    std::vector<int> lead;
    FFMatrix power = FFMatrix::identity(n, nv);
    for (int d = 0; d <= n; ++d) {
        std::vector<RationalFunction> v(n2, RationalFunction(nv));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[i * n + j] = power(i, j);
        std::vector<RationalFunction> c(d + 1, RationalFunction(nv));
        c[d] = RationalFunction::constant(nv, 1);
        for (std::size_t r = 0; r < basis.size(); ++r) {
            const auto& f = v[lead[r]];
            if (f.is_zero()) continue;
            RationalFunction fc = f;
            for (int k = 0; k < n2; ++k)
                if (!basis[r][k].is_zero()) v[k] -= fc * basis[r][k];
            for (std::size_t k = 0; k < combo[r].size(); ++k)
                if (!combo[r][k].is_zero()) c[k] -= fc * combo[r][k];
        }
        int l = -1;
        for (int k = 0; k < n2; ++k)
            if (!v[k].is_zero()) {
                l = k;
                break;
            }
        if (l < 0) return c;  // c(A) = 0 and c is monic of degree d
        RationalFunction inv = RationalFunction::constant(nv, 1) / v[l];
        for (auto& x : v)
            if (!x.is_zero()) x = x * inv;
        for (auto& x : c)
            if (!x.is_zero()) x = x * inv;
        basis.push_back(std::move(v));
        combo.push_back(std::move(c));
        lead.push_back(l);
        power = power * a;
    }
    throw std::logic_error("minimal polynomial degree exceeds matrix size");
}

FFMatrix evaluate_polynomial(const std::vector<RationalFunction>& coeffs, const FFMatrix& a) {
    const int n = a.rows();
    FFMatrix r(n, n, a.nvars());
    FFMatrix p = FFMatrix::identity(n, a.nvars());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) r = r + p.scaled(coeffs[k]);
        if (k + 1 < coeffs.size()) p = p * a;
    }
    return r;
}

}  // namespace affgraph
