#include "affgraph/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace affgraph {

namespace {

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const std::size_t n = a.size();
    IntMat r(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

IntMat unit(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntVec column(const IntMat& m, int j) {
    IntVec c(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
    return c;
}

}  // namespace

bool is_negative(const IntVec& root) {
    for (auto x : root)
        if (x != 0) return x < 0;
    return false;
}

WeylElement weyl_identity(const AffineCartanData& d) {
    WeylElement e{unit(d.rank), unit(d.rank), 0};
    return e;
}

WeylElement simple_reflection(const AffineCartanData& d, int i) {
    if (i < 1 || i > d.rank) throw std::out_of_range("simple reflection index out of range");
    IntMat m = unit(d.rank);
    // s_i(alpha_j) = alpha_j - a_ij alpha_i
    for (int j = 0; j < d.rank; ++j) m[i - 1][j] -= d.finite_cartan[i - 1][j];
    return WeylElement{m, m, 1};
}

WeylElement reflection(const AffineCartanData& d, int root_index) {
    const IntVec& beta = d.positive_roots.at(root_index);
    const IntVec& co = d.positive_coroots.at(root_index);
    IntMat m = unit(d.rank);
    for (int j = 0; j < d.rank; ++j) {
        long long c = 0;  // <alpha_j, beta^vee>
        for (int k = 0; k < d.rank; ++k) c += co[k] * d.finite_cartan[k][j];
        for (int k = 0; k < d.rank; ++k) m[k][j] -= c * beta[k];
    }
    WeylElement r{m, m, -1};
    r.cached_length = length(d, r);
    return r;
}

WeylElement multiply(const AffineCartanData& d, const WeylElement& u, const WeylElement& v) {
    WeylElement r{mat_mul(u.action, v.action), mat_mul(v.inverse_action, u.inverse_action), -1};
    r.cached_length = length(d, r);
    return r;
}

WeylElement inverse(const WeylElement& u) { return WeylElement{u.inverse_action, u.action, u.cached_length}; }

WeylElement from_word(const AffineCartanData& d, const Word& word) {
    WeylElement r = weyl_identity(d);
    for (int i : word) r = multiply(d, r, simple_reflection(d, i));
    return r;
}

IntVec apply_root(const WeylElement& u, const IntVec& root) {
    const std::size_t n = root.size();
    IntVec r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i] += u.action[i][j] * root[j];
    return r;
}

IntVec apply_coroot(const AffineCartanData& d, const WeylElement& u, const IntVec& coroot) {
    // u(alpha_j^vee) = (u alpha_j)^vee; rescale root coordinates by relative lengths
    const int n = d.rank;
    IntVec r(n, 0);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            if (coroot[j] == 0 || u.action[k][j] == 0) continue;
            long long num = u.action[k][j] * d.length_scaled[k] * coroot[j];
            r[k] += num / d.length_scaled[j];
        }
    return r;
}

RatVec apply_omega(const WeylElement& u, const RatVec& x) {
    // (u x, alpha_j) = (x, u^{-1} alpha_j)
    const std::size_t n = x.size();
    RatVec r(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (u.inverse_action[k][j] != 0) r[j] += x[k] * Rational(static_cast<long>(u.inverse_action[k][j]));
    return r;
}

IntVec apply_omega(const WeylElement& u, const IntVec& x) {
    const std::size_t n = x.size();
    IntVec r(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) r[j] += x[k] * u.inverse_action[k][j];
    return r;
}

int length(const AffineCartanData& d, const WeylElement& u) {
    if (u.cached_length >= 0) return u.cached_length;
    int l = 0;
    for (const auto& r : d.positive_roots)
        if (is_negative(apply_root(u, r))) ++l;
    return l;
}

bool is_left_descent(const WeylElement& u, int i) { return is_negative(column(u.inverse_action, i - 1)); }

bool is_right_descent(const WeylElement& u, int i) { return is_negative(column(u.action, i - 1)); }

Word reduced_word(const AffineCartanData& d, const WeylElement& u) {
    Word w;
    WeylElement x = u;
    for (;;) {
        int found = 0;
        for (int i = 1; i <= d.rank && !found; ++i)
            if (is_left_descent(x, i)) found = i;
        if (!found) break;
        w.push_back(found);
        x = multiply(d, simple_reflection(d, found), x);
    }
    return w;
}

namespace {

std::vector<WeylElement> closure(const AffineCartanData& d, const std::vector<int>& gens) {
    std::set<WeylElement> seen;
    std::deque<WeylElement> q;
    WeylElement e = weyl_identity(d);
    seen.insert(e);
    q.push_back(e);
    while (!q.empty()) {
        WeylElement x = q.front();
        q.pop_front();
        for (int i : gens) {
            WeylElement y = multiply(d, simple_reflection(d, i), x);
            if (seen.insert(y).second) q.push_back(y);
        }
    }
    std::vector<std::pair<std::pair<int, Word>, WeylElement>> keyed;
    keyed.reserve(seen.size());
    for (const auto& x : seen) keyed.push_back({{length(d, x), reduced_word(d, x)}, x});
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<WeylElement> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(std::move(k.second));
    return out;
}

}  // namespace

std::vector<WeylElement> enumerate_group(const AffineCartanData& d) {
    std::vector<int> all(d.rank);
    for (int i = 0; i < d.rank; ++i) all[i] = i + 1;
    return closure(d, all);
}

std::vector<WeylElement> enumerate_parabolic(const AffineCartanData& d, const std::vector<int>& J) {
    return closure(d, J);
}

WeylElement min_coset_rep(const AffineCartanData& d, const WeylElement& u, const std::vector<int>& J) {
    WeylElement x = u;
    for (bool changed = true; changed;) {
        changed = false;
        for (int j : J)
            if (is_right_descent(x, j)) {
                x = multiply(d, x, simple_reflection(d, j));
                changed = true;
            }
    }
    return x;
}

bool in_WJ(const WeylElement& u, const std::vector<int>& J) {
    return std::none_of(J.begin(), J.end(), [&](int j) { return is_right_descent(u, j); });
}

std::vector<WeylElement> enumerate_WJ(const AffineCartanData& d, const std::vector<int>& J) {
    std::vector<WeylElement> out;
    for (auto& x : enumerate_group(d))
        if (in_WJ(x, J)) out.push_back(x);
    return out;
}

std::vector<int> complement(const AffineCartanData& d, const std::vector<int>& jprime) {
    std::vector<int> J;
    for (int i = 1; i <= d.rank; ++i)
        if (std::find(jprime.begin(), jprime.end(), i) == jprime.end()) J.push_back(i);
    return J;
}

std::string word_string(const Word& w) {
    if (w.empty()) return "e";
    std::string s;
    bool wide = std::any_of(w.begin(), w.end(), [](int i) { return i > 9; });
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (wide && k) s += '.';
        s += std::to_string(w[k]);
    }
    return s;
}

Word parse_word(const std::string& s) {
    Word w;
    if (s == "e" || s.empty()) return w;
    if (s.find('.') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t next = s.find('.', pos);
            if (next == std::string::npos) next = s.size();
            w.push_back(std::stoi(s.substr(pos, next - pos)));
            pos = next + 1;
        }
        return w;
    }
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad word '" + s + "'");
        w.push_back(c - '0');
    }
    return w;
}

}  // namespace affgraph
