#include "affgraph/affine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace affgraph {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long dot(const IntVec& a, const IntVec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

AffineElement aff_identity(const AffineCartanData& d) { return {weyl_identity(d), IntVec(d.rank, 0)}; }

AffineElement finite_part(const AffineCartanData& d, const WeylElement& u) { return {u, IntVec(d.rank, 0)}; }

AffineElement translation(const AffineCartanData& d, const IntVec& coroot) {
    if (static_cast<int>(coroot.size()) != d.rank) throw std::invalid_argument("translation vector has wrong size");
    return {weyl_identity(d), coroot};
}

AffineElement aff_generator(const AffineCartanData& d, int i) {
    if (i < 0 || i > d.rank) throw std::out_of_range("affine generator index out of range");
    if (i > 0) return finite_part(d, simple_reflection(d, i));
    return {reflection(d, d.theta_index), d.theta_coroot};
}

AffineElement affine_reflection(const AffineCartanData& d, int root_index, long long k) {
    IntVec t = d.positive_coroots.at(root_index);
    for (auto& x : t) x *= k;
    return {reflection(d, root_index), t};
}

AffineElement aff_multiply(const AffineCartanData& d, const AffineElement& a, const AffineElement& b) {
    IntVec t = apply_coroot(d, inverse(b.finite), a.trans);
    for (int i = 0; i < d.rank; ++i) t[i] += b.trans[i];
    return {multiply(d, a.finite, b.finite), t};
}

AffineElement aff_inverse(const AffineCartanData& d, const AffineElement& a) {
    IntVec t = apply_coroot(d, a.finite, a.trans);
    for (auto& x : t) x = -x;
    return {inverse(a.finite), t};
}

AffineElement aff_from_word(const AffineCartanData& d, const Word& word) {
    AffineElement r = aff_identity(d);
    for (int i : word) r = aff_multiply(d, r, aff_generator(d, i));
    return r;
}

ScaledPoint sample_point(const AffineCartanData& d) {
    const int n = d.rank;
    long long l = 1;
    for (int i = 1; i <= n; ++i) l = std::lcm(l, d.marks[i]);
    ScaledPoint p;
    p.scale = (n + 1) * l;
    p.coords.resize(n);
    // barycenter of 0 and the vertices omega_i / a_i
    for (int i = 0; i < n; ++i) p.coords[i] = l / d.marks[i + 1];
    return p;
}

ScaledPoint sample_image(const AffineCartanData& d, const AffineElement& w) {
    const int n = d.rank;
    ScaledPoint p0 = sample_point(d);
    ScaledPoint p;
    p.scale = p0.scale;
    p.coords.assign(n, 0);
    IntVec lam = coroot_to_omega(d, w.trans);
    // (u^{-1} p0 + lambda, alpha_j) = (p0, u alpha_j) + (lambda, alpha_j)
    for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int k = 0; k < n; ++k) s += p0.coords[k] * w.finite.action[k][j];
        p.coords[j] = s + p.scale * lam[j];
    }
    return p;
}

namespace {

AlcoveCoords coords_of_point(const AffineCartanData& d, const ScaledPoint& p) {
    AlcoveCoords k(d.positive_roots.size());
    for (std::size_t r = 0; r < d.positive_roots.size(); ++r) {
        long long v = dot(p.coords, d.positive_roots[r]);
        if (v % p.scale == 0) throw std::logic_error("sample point lies on a wall");
        k[r] = floor_div(v, p.scale);
    }
    return k;
}

int length_of(const AlcoveCoords& k) {
    long long s = 0;
    for (auto x : k) s += x < 0 ? -x : x;
    return static_cast<int>(s);
}

}  // namespace

AlcoveCoords alcove_coordinates(const AffineCartanData& d, const AffineElement& w) {
    return coords_of_point(d, sample_image(d, w));
}

int length_affine(const AffineCartanData& d, const AffineElement& w) { return length_of(alcove_coordinates(d, w)); }

Crossing crossing_sign(const AffineCartanData& d, const AffineElement& w, int i) {
    AlcoveCoords a = alcove_coordinates(d, w);
    AlcoveCoords b = alcove_coordinates(d, aff_multiply(d, aff_generator(d, i), w));
    int changed = 0;
    Crossing sign = Crossing::negative;
    for (std::size_t r = 0; r < a.size(); ++r)
        if (a[r] != b[r]) {
            ++changed;
            sign = b[r] > a[r] ? Crossing::positive : Crossing::negative;
        }
    if (changed != 1) throw std::logic_error("adjacent alcoves differ in more than one hyperplane family");
    return sign;
}

Word aff_reduced_word(const AffineCartanData& d, const AffineElement& w) {
    Word word;
    AffineElement x = w;
    int l = length_affine(d, x);
    while (l > 0) {
        bool found = false;
        for (int i = 0; i <= d.rank && !found; ++i) {
            AffineElement y = aff_multiply(d, aff_generator(d, i), x);
            int ly = length_affine(d, y);
            if (ly < l) {
                word.push_back(i);
                x = std::move(y);
                l = ly;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no descent found for a nonidentity element");
    }
    return word;
}

std::string aff_word_string(const AffineCartanData& d, const AffineElement& w) {
    return word_string(aff_reduced_word(d, w));
}

bool is_grassmannian(const AffineCartanData& d, const AffineElement& w) {
    AlcoveCoords k = alcove_coordinates(d, w);
    return std::all_of(k.begin(), k.end(), [](long long x) { return x >= 0; });
}

std::vector<AffineElement> enumerate_grassmannians_up_to(const AffineCartanData& d, int max_length) {
    std::vector<AffineElement> out;
    std::vector<AffineElement> level{aff_identity(d)};
    for (int l = 0; l <= max_length && !level.empty(); ++l) {
        std::vector<std::pair<Word, AffineElement>> keyed;
        for (auto& w : level) keyed.emplace_back(aff_reduced_word(d, w), w);
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& k : keyed) out.push_back(k.second);
        if (l == max_length) break;
        std::set<AlcoveCoords> seen;
        std::vector<AffineElement> next;
        for (const auto& w : level)
            for (int i = 0; i <= d.rank; ++i) {
                AffineElement y = aff_multiply(d, aff_generator(d, i), w);
                AlcoveCoords k = alcove_coordinates(d, y);
                if (length_of(k) != l + 1) continue;
                if (!std::all_of(k.begin(), k.end(), [](long long x) { return x >= 0; })) continue;
                if (seen.insert(k).second) next.push_back(y);
            }
        level = std::move(next);
    }
    return out;
}

std::vector<int> parabolic_roots(const AffineCartanData& d, const std::vector<int>& J) {
    std::vector<int> out;
    for (int r = 0; r < d.num_positive(); ++r) {
        bool inside = true;
        for (int j = 0; j < d.rank; ++j)
            if (d.positive_roots[r][j] != 0 && std::find(J.begin(), J.end(), j + 1) == J.end()) inside = false;
        if (inside) out.push_back(r);
    }
    return out;
}

bool in_J_alcove(const AffineCartanData& d, const AffineElement& w, const std::vector<int>& J) {
    AlcoveCoords k = alcove_coordinates(d, w);
    for (int r : parabolic_roots(d, J))
        if (k[r] != 0) return false;
    return true;
}

std::pair<AffineElement, Word> star_translate_traced(const AffineCartanData& d, const AffineElement& w,
                                                     const IntVec& mu) {
    const int n = d.rank;
    if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("weight has wrong size");
    ScaledPoint q = sample_image(d, w);
    for (int j = 0; j < n; ++j) q.coords[j] += q.scale * mu[j];
    const IntVec theta_omega = coroot_to_omega(d, d.theta_coroot);
    Word walls;
    for (;;) {
        int wall = -1;
        for (int i = 0; i < n && wall < 0; ++i)
            if (q.coords[i] < 0) wall = i + 1;
        long long th = dot(q.coords, d.theta);
        if (wall < 0 && th > q.scale) wall = 0;
        if (wall < 0) break;
        if (wall > 0) {
            long long c = q.coords[wall - 1];
            for (int j = 0; j < n; ++j) q.coords[j] -= c * d.finite_cartan[wall - 1][j];
        } else {
            long long c = th - q.scale;
            for (int j = 0; j < n; ++j) q.coords[j] -= c * theta_omega[j];
        }
        walls.push_back(wall);
        if (walls.size() > 100000) throw std::logic_error("localization does not terminate");
    }
    // q = (q_k) s_{i_k} ... s_{i_1} with q_k inside A_0
    AffineElement u = aff_identity(d);
    for (auto it = walls.rbegin(); it != walls.rend(); ++it) u = aff_multiply(d, u, aff_generator(d, *it));
    return {u, walls};
}

AffineElement star_translate(const AffineCartanData& d, const AffineElement& w, const IntVec& mu) {
    return star_translate_traced(d, w, mu).first;
}

AffineElement project_to_J_alcove(const AffineCartanData& d, const AffineElement& x, const std::vector<int>& J) {
    const int n = d.rank;
    const std::vector<int> roots = parabolic_roots(d, J);
    ScaledPoint q = sample_image(d, x);
    AffineElement result = x;
    for (int guard = 0;; ++guard) {
        if (guard > 100000) throw std::logic_error("projection does not terminate");
        int hit = -1;
        long long m = 0;
        long long v = 0;
        for (int r : roots) {
            v = dot(q.coords, d.positive_roots[r]);
            if (v < 0) {
                hit = r;
                m = 0;
                break;
            }
            if (v > q.scale) {
                hit = r;
                m = 1;
                break;
            }
        }
        if (hit < 0) break;
        IntVec co = coroot_to_omega(d, d.positive_coroots[hit]);
        long long c = v - m * q.scale;
        for (int j = 0; j < n; ++j) q.coords[j] -= c * co[j];
        result = aff_multiply(d, result, affine_reflection(d, hit, m));
    }
    return result;
}

IntVec coroot_class(const AffineCartanData& d, const IntVec& coroot, const std::vector<int>& J) {
    IntVec cls;
    for (int j = 1; j <= d.rank; ++j)
        if (std::find(J.begin(), J.end(), j) == J.end()) cls.push_back(coroot[j - 1]);
    return cls;
}

IntVec lift_class(const AffineCartanData& d, const IntVec& cls, const std::vector<int>& J) {
    IntVec lam(d.rank, 0);
    std::size_t k = 0;
    for (int j = 1; j <= d.rank; ++j)
        if (std::find(J.begin(), J.end(), j) == J.end()) lam[j - 1] = cls.at(k++);
    if (k != cls.size()) throw std::invalid_argument("class vector has wrong size");
    return lam;
}

AffineElement bullet_translate(const AffineCartanData& d, const AffineElement& u, const IntVec& cls,
                               const std::vector<int>& J) {
    if (!in_J_alcove(d, u, J)) throw std::invalid_argument("bullet action needs an alcove in A_J");
    return project_to_J_alcove(d, aff_multiply(d, u, translation(d, lift_class(d, cls, J))), J);
}

WeylElement vJ(const AffineCartanData& d, const IntVec& coroot, const std::vector<int>& J) {
    for (const auto& v : enumerate_parabolic(d, J))
        if (in_J_alcove(d, AffineElement{v, coroot}, J)) return v;
    throw std::logic_error("no element of W_J moves the translation into A_J");
}

UJFactor uj_decompose(const AffineCartanData& d, const AffineElement& x, const std::vector<int>& J) {
    return {min_coset_rep(d, x.finite, J), coroot_class(d, x.trans, J)};
}

std::vector<AffineElement> enumerate_window(const AffineCartanData& d, long long bound) {
    auto inside = [&](const AlcoveCoords& k) {
        return std::all_of(k.begin(), k.end(), [&](long long x) { return x <= bound && x >= -bound; });
    };
    std::map<AlcoveCoords, AffineElement> seen;
    std::vector<AffineElement> frontier{aff_identity(d)};
    seen.emplace(alcove_coordinates(d, frontier[0]), frontier[0]);
    while (!frontier.empty()) {
        std::vector<AffineElement> next;
        for (const auto& w : frontier)
            for (int i = 0; i <= d.rank; ++i) {
                AffineElement y = aff_multiply(d, aff_generator(d, i), w);
                AlcoveCoords k = alcove_coordinates(d, y);
                if (!inside(k)) continue;
                if (seen.emplace(k, y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    std::vector<AffineElement> out;
    out.reserve(seen.size());
    for (auto& [k, w] : seen) out.push_back(w);
    return out;
}

}  // namespace affgraph
