#include "affgraph/particles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace affgraph {

namespace {

void require_type(const AffineCartanData& d, TypeLabel t, const char* what) {
    if (d.type_label != t)
        throw std::invalid_argument(std::string(what) + " needs type " + type_name(t) + " data, got " + d.name());
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// epsilon_k (1-based) in omega-coordinates. In type A the vectors are taken
// modulo the sum of all epsilon_k, which the Weyl group fixes.
IntVec epsilon(const AffineCartanData& d, int k) {
    const int n = d.rank;
    IntVec v(n, 0);
    if (d.type_label == TypeLabel::A) {
        if (k <= n) v[k - 1] += 1;
        if (k >= 2) v[k - 2] -= 1;
    } else {
        if (k < n) {
            v[k - 1] += 1;
        } else {
            v[n - 1] += 2;
        }
        if (k >= 2) v[k - 2] -= 1;
    }
    return v;
}

int num_eps(const AffineCartanData& d) { return d.type_label == TypeLabel::A ? d.rank + 1 : d.rank; }

// For each k, u^{-1}(epsilon_k) = sign * epsilon_m, returned as (m, sign).
std::vector<std::pair<int, int>> signed_permutation(const AffineCartanData& d, const WeylElement& u) {
    const int ne = num_eps(d);
    std::vector<IntVec> eps(ne + 1);
    for (int k = 1; k <= ne; ++k) eps[k] = epsilon(d, k);
    const WeylElement ui = inverse(u);
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= ne; ++k) {
        const IntVec img = apply_omega(ui, eps[k]);
        std::pair<int, int> found{0, 0};
        for (int m = 1; m <= ne && found.first == 0; ++m) {
            if (img == eps[m]) {
                found = {m, 1};
            } else if (d.type_label == TypeLabel::C) {
                IntVec neg = eps[m];
                for (auto& x : neg) x = -x;
                if (img == neg) found = {m, -1};
            }
        }
        if (found.first == 0) throw std::logic_error("Weyl group element does not permute the epsilon basis");
        out.push_back(found);
    }
    return out;
}

// lambda in epsilon-coordinates from simple-coroot coordinates:
// alpha_i^vee = eps_i - eps_{i+1} (i < n), and alpha_n^vee = eps_n in type C.
IntVec coroot_to_eps(const AffineCartanData& d, const IntVec& c) {
    const int ne = num_eps(d);
    IntVec l(ne, 0);
    for (int k = 0; k < ne; ++k) {
        const long long cur = k < d.rank ? c[k] : 0;
        const long long prev = k >= 1 ? c[k - 1] : 0;
        l[k] = cur - prev;
    }
    return l;
}

IntVec eps_to_coroot(const AffineCartanData& d, const IntVec& l) {
    IntVec c(d.rank, 0);
    long long acc = 0;
    for (int i = 0; i < d.rank; ++i) {
        acc += l[i];
        c[i] = acc;
    }
    return c;
}

template <class Descent, class Act>
Word word_from_window(IntVec win, int n, Descent descent, Act act) {
    Word w;
    for (bool again = true; again;) {
        again = false;
        for (int i = 1; i <= n; ++i) {
            if (!descent(win, i)) continue;
            win = act(i, win);
            w.push_back(i);
            again = true;
            break;
        }
    }
    return w;
}

}  // namespace

std::string window_string(const IntVec& win) {
    std::string s = "[";
    for (std::size_t k = 0; k < win.size(); ++k) s += (k ? "," : "") + std::to_string(win[k]);
    return s + "]";
}

// ---- type A windows ----

TypeAWindow windowA_of(const AffineCartanData& d, const AffineElement& w) {
    require_type(d, TypeLabel::A, "windowA_of");
    const long long N = d.rank + 1;
    const auto perm = signed_permutation(d, w.finite);
    const IntVec lam = coroot_to_eps(d, w.trans);
    TypeAWindow out;
    for (const auto& [m, sign] : perm) out.window.push_back(m + N * lam[m - 1]);
    return out;
}

bool windowA_valid(const TypeAWindow& win) {
    const long long N = static_cast<long long>(win.window.size());
    if (N < 2) return false;
    std::vector<char> seen(N, 0);
    long long sum = 0;
    for (long long j : win.window) {
        const long long r = j - N * floor_div(j, N);
        if (seen[r]) return false;
        seen[r] = 1;
        sum += j;
    }
    return sum == N * (N + 1) / 2;
}

TypeAWindow windowA_generator_action(int i, const TypeAWindow& win) {
    const int N = static_cast<int>(win.window.size());
    if (i < 0 || i >= N) throw std::invalid_argument("generator index out of range");
    TypeAWindow out = win;
    auto& v = out.window;
    if (i == 0) {
        const long long first = v[0], last = v[N - 1];
        v[0] = last - N;
        v[N - 1] = first + N;
    } else {
        std::swap(v[i - 1], v[i]);
    }
    return out;
}

AffineElement element_of_windowA(const AffineCartanData& d, const TypeAWindow& win) {
    require_type(d, TypeLabel::A, "element_of_windowA");
    const int n = d.rank;
    const long long N = n + 1;
    if (static_cast<long long>(win.window.size()) != N || !windowA_valid(win))
        throw std::invalid_argument("not an affine permutation window: " + window_string(win.window));
    IntVec finite(N), lam(N, 0);
    for (long long k = 0; k < N; ++k) {
        const long long q = floor_div(win.window[k] - 1, N);
        const long long m = win.window[k] - N * q;
        finite[k] = m;
        lam[m - 1] = q;
    }
    const Word word = word_from_window(
        finite, n, [](const IntVec& v, int i) { return v[i - 1] > v[i]; },
        [](int i, const IntVec& v) { return windowA_generator_action(i, TypeAWindow{v}).window; });
    return AffineElement{from_word(d, word), eps_to_coroot(d, lam)};
}

// ---- type C windows ----

TypeCWindow windowC_of(const AffineCartanData& d, const AffineElement& w) {
    require_type(d, TypeLabel::C, "windowC_of");
    const long long N = 2 * d.rank + 1;
    const auto perm = signed_permutation(d, w.finite);
    const IntVec lam = coroot_to_eps(d, w.trans);
    TypeCWindow out;
    for (const auto& [m, sign] : perm)
        out.window.push_back(sign > 0 ? m + N * lam[m - 1] : N - m - N * lam[m - 1]);
    return out;
}

bool windowC_valid(const TypeCWindow& win) {
    const long long n = static_cast<long long>(win.window.size());
    const long long N = 2 * n + 1;
    if (n < 1) return false;
    std::vector<char> seen(n + 1, 0);
    for (long long j : win.window) {
        const long long r = j - N * floor_div(j, N);
        if (r == 0) return false;
        const long long m = r <= n ? r : N - r;
        if (seen[m]) return false;
        seen[m] = 1;
    }
    return true;
}

TypeCWindow windowC_generator_action(int i, const TypeCWindow& win) {
    const int n = static_cast<int>(win.window.size());
    const long long N = 2 * n + 1;
    if (i < 0 || i > n) throw std::invalid_argument("generator index out of range");
    TypeCWindow out = win;
    auto& v = out.window;
    if (i == 0)
        v[0] = -v[0];
    else if (i == n)
        v[n - 1] = N - v[n - 1];
    else
        std::swap(v[i - 1], v[i]);
    return out;
}

AffineElement element_of_windowC(const AffineCartanData& d, const TypeCWindow& win) {
    require_type(d, TypeLabel::C, "element_of_windowC");
    const int n = d.rank;
    const long long N = 2 * n + 1;
    if (static_cast<int>(win.window.size()) != n || !windowC_valid(win))
        throw std::invalid_argument("not a signed affine permutation window: " + window_string(win.window));
    IntVec finite(n), lam(n, 0);
    for (int k = 0; k < n; ++k) {
        const long long j = win.window[k];
        const long long q = floor_div(j, N);
        const long long r = j - N * q;
        if (r <= n) {
            finite[k] = r;
            lam[r - 1] = q;
        } else {
            finite[k] = r;
            lam[N - r - 1] = -q;
        }
    }
    const Word word = word_from_window(
        finite, n,
        [n](const IntVec& v, int i) { return i < n ? v[i - 1] > v[i] : v[n - 1] > n; },
        [](int i, const IntVec& v) { return windowC_generator_action(i, TypeCWindow{v}).window; });
    return AffineElement{from_word(d, word), eps_to_coroot(d, lam)};
}

// ---- colour words ----

std::string ColorWord::str() const {
    std::string s;
    for (std::size_t k = 0; k < colors.size(); ++k) {
        s += std::to_string(colors[k]);
        if (spins[k] < 0) s += "-";
        if (spins[k] > 0) s += "+";
    }
    return s;
}

ColorModel color_model(const AffineCartanData& d, const std::vector<int>& jprime_in) {
    if (d.type_label != TypeLabel::A && d.type_label != TypeLabel::C)
        throw std::invalid_argument("particle models are only available in types A and C, not " + d.name());
    ColorModel m;
    m.type = d.type_label;
    m.rank = d.rank;
    m.jprime = jprime_in;
    std::sort(m.jprime.begin(), m.jprime.end());
    m.jprime.erase(std::unique(m.jprime.begin(), m.jprime.end()), m.jprime.end());
    const std::vector<int> J = complement(d, m.jprime);
    const int n = d.rank;
    const bool typeA = d.type_label == TypeLabel::A;
    const int nv = typeA ? n + 1 : 2 * n;
    const int N = typeA ? n + 1 : 2 * n + 1;

    std::vector<int> parent(nv + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int j : J) {
        if (typeA || j < n) {
            unite(j, j + 1);
            if (!typeA) unite(N - j, N - j - 1);
        } else {
            unite(n, n + 1);
        }
    }
    std::map<int, std::vector<int>> orbit;
    for (int v = 1; v <= nv; ++v) orbit[find(v)].push_back(v);
    for (auto& [root, vals] : orbit) m.blocks.push_back(vals);
    std::sort(m.blocks.begin(), m.blocks.end());

    m.colors.assign(nv, 0);
    int next = 0;
    for (const auto& b : m.blocks) {
        if (m.colors[b.front() - 1] != 0) continue;
        if (!typeA && b.front() > n) continue;  // coloured through its mirror
        ++next;
        for (int v : b) {
            m.colors[v - 1] = next;
            if (!typeA) m.colors[N - v - 1] = next;
        }
        if (!typeA && std::find(b.begin(), b.end(), N - b.front()) != b.end()) m.self_dual_color = next;
    }
    m.num_colors = next;
    m.multiplicity.assign(next + 1, 0);
    const int letters = typeA ? n + 1 : n;
    for (int v = 1; v <= letters; ++v) ++m.multiplicity[m.colors[v - 1]];
    return m;
}

namespace {

std::pair<int, int> letter_of_value(const ColorModel& m, long long v) {
    const int c = m.colors.at(v - 1);
    if (m.type == TypeLabel::A || c == m.self_dual_color) return {c, 0};
    return {c, v <= m.rank ? -1 : 1};
}

}  // namespace

ColorWord color_word_of(const ColorModel& m, const AffineCartanData& d, const WeylElement& u) {
    const AffineElement x = finite_part(d, u);
    const IntVec win = m.type == TypeLabel::A ? windowA_of(d, x).window : windowC_of(d, x).window;
    ColorWord w;
    for (long long v : win) {
        auto [c, s] = letter_of_value(m, v);
        w.colors.push_back(c);
        w.spins.push_back(s);
    }
    return w;
}

int ParticleGraph::vertex_of(const ColorWord& w) const {
    auto it = std::find(words.begin(), words.end(), w);
    return it == words.end() ? -1 : static_cast<int>(it - words.begin());
}

ParticleGraph build_particle_graph(const AffineCartanData& d, const std::vector<int>& jprime) {
    const ColorModel m = color_model(d, jprime);
    const int n = d.rank;
    const bool typeA = m.type == TypeLabel::A;
    const int nvars = static_cast<int>(m.jprime.size());
    const long long N = 2 * n + 1;

    std::vector<int> letters;
    for (int c = 1; c <= m.num_colors; ++c) letters.insert(letters.end(), m.multiplicity[c], c);
    std::vector<ColorWord> words;
    do {
        std::vector<int> spinned;
        for (std::size_t k = 0; k < letters.size(); ++k)
            if (!typeA && letters[k] != m.self_dual_color) spinned.push_back(static_cast<int>(k));
        for (unsigned mask = 0; mask < (1u << spinned.size()); ++mask) {
            ColorWord w{letters, std::vector<int>(letters.size(), 0)};
            for (std::size_t t = 0; t < spinned.size(); ++t) w.spins[spinned[t]] = (mask >> t) & 1u ? 1 : -1;
            words.push_back(w);
        }
    } while (std::next_permutation(letters.begin(), letters.end()));
    std::sort(words.begin(), words.end());

    ParticleGraph p;
    p.graph = WeightedDigraph(nvars);
    for (int j : m.jprime) p.legend.push_back("class(alpha" + std::to_string(j) + "^vee)");
    std::map<ColorWord, int> index;
    for (const auto& w : words) {
        index[w] = p.graph.add_vertex(w.str());
        p.words.push_back(w);
    }

    // z^{-(sum of the J' coroots with index in [lo, hi))}
    auto wrap_weight = [&](int lo, int hi) {
        std::vector<int> e(nvars, 0);
        for (int k = lo; k < hi; ++k) e[k] = -1;
        return LaurentPoly::monomial(e, Rational(static_cast<long>(d.marks[0])));
    };
    auto constant = [&](int i) { return LaurentPoly::constant(nvars, Rational(static_cast<long>(d.marks[i]))); };
    // order of a letter along the segment in type C
    auto rank_of = [&](const ColorWord& w, int k) -> long long {
        if (w.spins[k] == 0) return 0;
        return w.spins[k] < 0 ? 2LL * w.colors[k] - N : N - 2LL * w.colors[k];
    };

    for (std::size_t v = 0; v < words.size(); ++v) {
        const ColorWord& w = words[v];
        const int len = static_cast<int>(w.colors.size());
        if (typeA) {
            for (int i = 1; i <= n; ++i) {
                if (w.colors[i - 1] >= w.colors[i]) continue;
                ColorWord t = w;
                std::swap(t.colors[i - 1], t.colors[i]);
                p.graph.add_edge(static_cast<int>(v), index.at(t), i, constant(i));
            }
            const int first = w.colors.front(), last = w.colors.back();
            if (last < first) {
                ColorWord t = w;
                std::swap(t.colors.front(), t.colors.back());
                p.graph.add_edge(static_cast<int>(v), index.at(t), 0, wrap_weight(last - 1, first - 1));
            }
            continue;
        }
        for (int i = 1; i < n; ++i) {
            if (rank_of(w, i - 1) >= rank_of(w, i)) continue;
            ColorWord t = w;
            std::swap(t.colors[i - 1], t.colors[i]);
            std::swap(t.spins[i - 1], t.spins[i]);
            p.graph.add_edge(static_cast<int>(v), index.at(t), i, constant(i));
        }
        if (w.spins[len - 1] < 0) {
            ColorWord t = w;
            t.spins[len - 1] = 1;
            p.graph.add_edge(static_cast<int>(v), index.at(t), n, constant(n));
        }
        if (w.spins[0] > 0) {
            ColorWord t = w;
            t.spins[0] = -1;
            p.graph.add_edge(static_cast<int>(v), index.at(t), 0, wrap_weight(w.colors[0] - 1, nvars));
        }
    }
    return p;
}

ModelReport verify_particle_model(const AffineCartanData& d, const std::vector<int>& jprime) {
    ModelReport r;
    const GammaGraph g = build_gamma_gamma(d, jprime);
    const ParticleGraph p = build_particle_graph(d, jprime);
    r.isomorphic = typed_isomorphic(g.graph, p.graph).isomorphic;

    const ColorModel m = color_model(d, jprime);
    std::vector<int> map(g.graph.size(), -1);
    std::vector<char> hit(p.graph.size(), 0);
    bool ok = g.graph.size() == p.graph.size();
    for (int v = 0; v < g.graph.size() && ok; ++v) {
        const ColorWord w = color_word_of(m, d, g.elements[v].finite);
        map[v] = p.vertex_of(w);
        if (map[v] < 0 || hit[map[v]]) {
            ok = false;
            r.detail = "vertex " + g.words[v] + " maps to " + w.str() + (map[v] < 0 ? ", not a vertex" : ", twice");
        } else {
            hit[map[v]] = 1;
        }
    }
    if (ok) {
        using Key = std::tuple<int, int, int, std::string>;
        std::multiset<Key> lhs, rhs;
        for (const auto& e : g.graph.edges()) lhs.insert({map[e.src], map[e.dst], e.type, e.weight.to_string()});
        for (const auto& e : p.graph.edges()) rhs.insert({e.src, e.dst, e.type, e.weight.to_string()});
        ok = lhs == rhs;
        if (!ok) {
            for (const auto& k : lhs)
                if (!rhs.count(k)) {
                    r.detail = "edge " + p.graph.label(std::get<0>(k)) + " -> " + p.graph.label(std::get<1>(k)) +
                               " of type " + std::to_string(std::get<2>(k)) + " has no particle counterpart";
                    break;
                }
            if (r.detail.empty()) r.detail = "particle graph has extra edges";
        }
    }
    r.map_is_isomorphism = ok;
    return r;
}

// ---- key tableaux ----

std::string KeyTableau::str() const {
    std::string s;
    for (const auto& c : columns) {
        s += "[";
        for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
        s += "]";
    }
    return s;
}

bool is_key_tableau(const KeyTableau& t, int max_entry) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        const auto& col = t.columns[c];
        if (col.empty()) return false;
        for (std::size_t k = 0; k < col.size(); ++k) {
            if (col[k] < 1 || col[k] > max_entry) return false;
            if (k && col[k] <= col[k - 1]) return false;
        }
        if (c == 0) continue;
        const auto& left = t.columns[c - 1];
        if (col.size() > left.size()) return false;
        if (!std::includes(left.begin(), left.end(), col.begin(), col.end())) return false;
    }
    return true;
}

KeyTableau key_highest(const AffineCartanData& d, const std::vector<int>& jprime) {
    require_type(d, TypeLabel::A, "key tableaux");
    std::vector<int> lengths = jprime;
    std::sort(lengths.rbegin(), lengths.rend());
    KeyTableau t;
    for (int l : lengths) {
        if (l < 1 || l > d.rank) throw std::invalid_argument("column length out of range");
        std::vector<int> col(l);
        std::iota(col.begin(), col.end(), 1);
        t.columns.push_back(col);
    }
    return t;
}

namespace {

// Replaces a by b (and b by a) in the columns holding exactly one of them.
// `forward` reports whether some a became b.
KeyTableau exchange(const KeyTableau& t, int a, int b, bool& forward) {
    KeyTableau out = t;
    forward = false;
    for (auto& col : out.columns) {
        const bool has_a = std::find(col.begin(), col.end(), a) != col.end();
        const bool has_b = std::find(col.begin(), col.end(), b) != col.end();
        if (has_a == has_b) continue;
        for (int& x : col) {
            if (x == a) {
                x = b;
                forward = true;
            } else if (x == b) {
                x = a;
            }
        }
        std::sort(col.begin(), col.end());
    }
    return out;
}

}  // namespace

KeyTableau key_action(const AffineCartanData& d, const KeyTableau& t, int i) {
    require_type(d, TypeLabel::A, "key_action");
    const int n = d.rank;
    if (i < 0 || i > n) throw std::invalid_argument("generator index out of range");
    bool forward = false;
    return i == 0 ? exchange(t, n + 1, 1, forward) : exchange(t, i, i + 1, forward);
}

TableauGraph key_orbit_graph(const AffineCartanData& d, const std::vector<int>& jprime) {
    require_type(d, TypeLabel::A, "key_orbit_graph");
    const int n = d.rank;
    TableauGraph g;
    std::map<KeyTableau, int> index;
    std::queue<KeyTableau> todo;
    auto visit = [&](const KeyTableau& t) {
        auto it = index.find(t);
        if (it != index.end()) return it->second;
        const int v = g.graph.add_vertex(t.str());
        g.tableaux.push_back(t);
        index.emplace(t, v);
        todo.push(t);
        return v;
    };
    visit(key_highest(d, jprime));
    const LaurentPoly one = LaurentPoly::constant(0, Rational(1));
    while (!todo.empty()) {
        const KeyTableau t = todo.front();
        todo.pop();
        const int v = index.at(t);
        for (int i = 0; i <= n; ++i) {
            bool forward = false;
            const KeyTableau s = i == 0 ? exchange(t, n + 1, 1, forward) : exchange(t, i, i + 1, forward);
            const int w = visit(s);
            if (forward && !(s == t)) g.graph.add_edge(v, w, i, one);
        }
    }
    return g;
}

}  // namespace affgraph
