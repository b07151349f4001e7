#include "shlab/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace shlab {

namespace {

std::string tuple_str(const FiniteAlgebra& a, const std::vector<int>& w,
                      const std::vector<std::string>& names) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += names[i] + "=" + a.label(w[i]);
    }
    return s;
}

}  // namespace

int FiniteAlgebra::element(const std::string& lbl) const {
    for (int e = 0; e < order; ++e)
        if (labels[e] == lbl) return e;
    return -1;
}

std::optional<std::string> validate_algebra(const FiniteAlgebra& a) {
    const int n = a.order;
    if (n < 1) return "order must be at least 1";
    if ((int)a.labels.size() != n) return "label count differs from order";
    for (const auto& l : a.labels) {
        if (l.empty()) return "empty element label";
        if (l.find_first_of(" \t\n") != std::string::npos) return "label contains whitespace";
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.labels[i] == a.labels[j]) return "duplicate label '" + a.labels[i] + "'";
    if (a.bot < 0 || a.bot >= n) return "bottom index out of range";
    if (a.top < 0 || a.top >= n) return "top index out of range";
    if (n > 1 && a.bot == a.top) return "bottom equals top in a nontrivial algebra";

    auto table_ok = [&](const std::vector<std::vector<int>>& t, const char* nm)
        -> std::optional<std::string> {
        if ((int)t.size() != n) return std::string(nm) + " table has wrong row count";
        for (const auto& row : t) {
            if ((int)row.size() != n) return std::string(nm) + " table has a wrong-width row";
            for (int v : row)
                if (v < 0 || v >= n) return std::string(nm) + " table entry out of range";
        }
        return std::nullopt;
    };
    if (auto e = table_ok(a.meet, "meet")) return e;
    if (auto e = table_ok(a.join, "join")) return e;
    if (auto e = table_ok(a.imp, "imp")) return e;
    if (a.neg && (int)a.neg->size() != n) return "neg table has wrong size";
    if (a.neg)
        for (int v : *a.neg)
            if (v < 0 || v >= n) return "neg table entry out of range";

    auto lbl = [&](int e) { return a.labels[e]; };
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (a.meet[x][y] != a.meet[y][x])
                return "meet not commutative at (" + lbl(x) + ", " + lbl(y) + ")";
            if (a.join[x][y] != a.join[y][x])
                return "join not commutative at (" + lbl(x) + ", " + lbl(y) + ")";
            if (a.meet[x][a.join[x][y]] != x)
                return "absorption x&(x|y)=x fails at (" + lbl(x) + ", " + lbl(y) + ")";
            if (a.join[x][a.meet[x][y]] != x)
                return "absorption x|(x&y)=x fails at (" + lbl(x) + ", " + lbl(y) + ")";
            for (int z = 0; z < n; ++z) {
                if (a.meet[a.meet[x][y]][z] != a.meet[x][a.meet[y][z]])
                    return "meet not associative at (" + lbl(x) + ", " + lbl(y) + ", " + lbl(z) + ")";
                if (a.join[a.join[x][y]][z] != a.join[x][a.join[y][z]])
                    return "join not associative at (" + lbl(x) + ", " + lbl(y) + ", " + lbl(z) + ")";
            }
        }
        if (a.meet[x][a.bot] != a.bot) return "bottom is not least: " + lbl(x);
        if (a.join[x][a.top] != a.top) return "top is not greatest: " + lbl(x);
    }
    return std::nullopt;
}

int evaluate(const Formula& f, const FiniteAlgebra& a, const Valuation& v) {
    switch (f.kind) {
        case FKind::Var: {
            auto it = v.find(f.name);
            if (it == v.end()) throw UnboundVariable(f.name);
            return it->second;
        }
        case FKind::Bot:
            return a.bot;
        case FKind::Top:
            return a.top;
        case FKind::Neg: {
            if (!a.neg) throw MissingNegation(a.name);
            return (*a.neg)[evaluate(*f.lhs, a, v)];
        }
        case FKind::Meet:
            return a.meet[evaluate(*f.lhs, a, v)][evaluate(*f.rhs, a, v)];
        case FKind::Join:
            return a.join[evaluate(*f.lhs, a, v)][evaluate(*f.rhs, a, v)];
        case FKind::Imp:
            return a.imp[evaluate(*f.lhs, a, v)][evaluate(*f.rhs, a, v)];
    }
    throw std::logic_error("unreachable formula kind");
}

int evaluate(const FormulaPtr& f, const FiniteAlgebra& a, const Valuation& v) {
    return evaluate(*f, a, v);
}

std::string SemiHeytingReport::describe(const FiniteAlgebra& a) const {
    if (pass) return "semi-Heyting laws hold";
    static const std::vector<std::string> names = {"x", "y", "z"};
    return failed_law + " fails at (" + tuple_str(a, witness, names) + ")";
}

SemiHeytingReport is_semiheyting(const FiniteAlgebra& a) {
    const int n = a.order;
    for (int x = 0; x < n; ++x)
        if (a.imp[x][x] != a.top) return {false, "SH4", {x}};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (a.meet[x][a.imp[x][y]] != a.meet[x][y]) return {false, "SH2", {x, y}};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int lhs = a.meet[x][a.imp[y][z]];
                int rhs = a.meet[x][a.imp[a.meet[x][y]][a.meet[x][z]]];
                if (lhs != rhs) return {false, "SH3", {x, y, z}};
            }
    return {};
}

std::optional<std::vector<int>> isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.order != b.order || a.has_neg() != b.has_neg()) return std::nullopt;
    const int n = a.order;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (p[a.bot] != b.bot || p[a.top] != b.top) continue;
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            if (a.neg && p[(*a.neg)[x]] != (*b.neg)[p[x]]) ok = false;
            for (int y = 0; y < n && ok; ++y) {
                if (p[a.meet[x][y]] != b.meet[p[x]][p[y]]) ok = false;
                else if (p[a.join[x][y]] != b.join[p[x]][p[y]]) ok = false;
                else if (p[a.imp[x][y]] != b.imp[p[x]][p[y]]) ok = false;
            }
        }
        if (ok) return p;
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

namespace {

// Flattened tables after relabeling by p; used for canonical enumeration forms.
std::vector<int> relabeled_key(const FiniteAlgebra& a, const std::vector<int>& p) {
    const int n = a.order;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[p[i]] = i;
    std::vector<int> key;
    key.reserve(3 * n * n);
    for (const auto* t : {&a.meet, &a.join, &a.imp})
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) key.push_back(p[(*t)[inv[x]][inv[y]]]);
    return key;
}

std::vector<int> canonical_key(const FiniteAlgebra& a) {
    const int n = a.order;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::optional<std::vector<int>> best;
    do {
        if (p[a.bot] != a.bot || p[a.top] != a.top) continue;
        auto key = relabeled_key(a, p);
        if (!best || key < *best) best = key;
    } while (std::next_permutation(p.begin(), p.end()));
    return *best;
}

std::vector<std::string> chain_labels(int n) {
    std::vector<std::string> ls(n);
    ls[0] = "0";
    ls[n - 1] = "1";
    for (int i = 1; i + 1 < n; ++i) ls[i] = std::string(1, char('a' + i - 1));
    if (n == 1) ls[0] = "0";
    return ls;
}

// All bounded lattices on {0..n-1} with bot=0, top=n-1, as meet/join tables.
// Free choices live on pairs of middle elements; each pair is below/above/incomparable.
void lattices_rec(int n, std::vector<std::vector<char>>& leq,
                  const std::vector<std::pair<int, int>>& pairs, size_t k,
                  std::vector<FiniteAlgebra>& out) {
    if (k == pairs.size()) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (leq[x][y] && leq[y][z] && !leq[x][z]) return;
        FiniteAlgebra a;
        a.order = n;
        a.labels = chain_labels(n);
        a.bot = 0;
        a.top = n - 1;
        a.meet.assign(n, std::vector<int>(n, -1));
        a.join.assign(n, std::vector<int>(n, -1));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int glb = -1, lub = -1;
                for (int z = 0; z < n; ++z) {
                    if (leq[z][x] && leq[z][y]) {
                        bool greatest = true;
                        for (int w = 0; w < n; ++w)
                            if (leq[w][x] && leq[w][y] && !leq[w][z]) greatest = false;
                        if (greatest) glb = z;
                    }
                    if (leq[x][z] && leq[y][z]) {
                        bool least = true;
                        for (int w = 0; w < n; ++w)
                            if (leq[x][w] && leq[y][w] && !leq[z][w]) least = false;
                        if (least) lub = z;
                    }
                }
                if (glb < 0 || lub < 0) return;
                a.meet[x][y] = glb;
                a.join[x][y] = lub;
            }
        out.push_back(std::move(a));
        return;
    }
    auto [i, j] = pairs[k];
    for (int mode = 0; mode < 3; ++mode) {
        leq[i][j] = (mode == 0);
        leq[j][i] = (mode == 1);
        lattices_rec(n, leq, pairs, k + 1, out);
        leq[i][j] = leq[j][i] = 0;
    }
}

void imp_rec(const FiniteAlgebra& lat, std::vector<std::vector<int>>& imp, int x, int y,
             std::vector<FiniteAlgebra>& out) {
    const int n = lat.order;
    if (x == n) {
        FiniteAlgebra a = lat;
        a.imp = imp;
        bool sh3 = true;
        for (int u = 0; u < n && sh3; ++u)
            for (int v = 0; v < n && sh3; ++v)
                for (int w = 0; w < n && sh3; ++w)
                    if (a.meet[u][a.imp[v][w]] !=
                        a.meet[u][a.imp[a.meet[u][v]][a.meet[u][w]]])
                        sh3 = false;
        if (sh3) out.push_back(std::move(a));
        return;
    }
    int nx = (y + 1 == n) ? x + 1 : x;
    int ny = (y + 1 == n) ? 0 : y + 1;
    if (x == y) {
        imp[x][y] = lat.top;
        imp_rec(lat, imp, nx, ny, out);
        return;
    }
    for (int z = 0; z < n; ++z) {
        if (lat.meet[x][z] != lat.meet[x][y]) continue;
        imp[x][y] = z;
        imp_rec(lat, imp, nx, ny, out);
    }
}

}  // namespace

std::vector<FiniteAlgebra> enumerate_sh(int order, int cap) {
    if (order < 1) throw AlgebraError("order must be positive");
    if (order > cap)
        throw AlgebraError("enumeration order " + std::to_string(order) +
                           " exceeds cap " + std::to_string(cap));
    if (order == 1) {
        FiniteAlgebra a;
        a.name = "sh1_1";
        a.order = 1;
        a.labels = {"0"};
        a.bot = a.top = 0;
        a.meet = a.join = a.imp = {{0}};
        return {a};
    }
    std::vector<FiniteAlgebra> lattices;
    std::vector<std::vector<char>> leq(order, std::vector<char>(order, 0));
    for (int x = 0; x < order; ++x) {
        leq[x][x] = 1;
        leq[0][x] = 1;
        leq[x][order - 1] = 1;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i + 1 < order; ++i)
        for (int j = i + 1; j + 1 < order; ++j) pairs.emplace_back(i, j);
    lattices_rec(order, leq, pairs, 0, lattices);

    std::vector<FiniteAlgebra> raw;
    for (const auto& lat : lattices) {
        std::vector<std::vector<int>> imp(order, std::vector<int>(order, -1));
        imp_rec(lat, imp, 0, 0, raw);
    }

    std::set<std::vector<int>> seen;
    std::vector<std::pair<std::vector<int>, FiniteAlgebra>> keep;
    for (auto& a : raw) {
        auto key = canonical_key(a);
        if (seen.insert(key).second) keep.emplace_back(std::move(key), std::move(a));
    }
    std::sort(keep.begin(), keep.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<FiniteAlgebra> result;
    for (size_t i = 0; i < keep.size(); ++i) {
        keep[i].second.name = "sh" + std::to_string(order) + "_" + std::to_string(i + 1);
        result.push_back(std::move(keep[i].second));
    }
    return result;
}

namespace {

int middle_of_3chain(const FiniteAlgebra& a, const char* op) {
    if (a.order != 3) throw AlgebraError(std::string(op) + " requires a 3-element chain");
    for (int e = 0; e < 3; ++e)
        if (e != a.bot && e != a.top) return e;
    throw AlgebraError(std::string(op) + ": degenerate bounds");
}

}  // namespace

FiniteAlgebra expand_dm(const FiniteAlgebra& a) {
    int m = middle_of_3chain(a, "expand_dm");
    if (a.neg) throw AlgebraError("expand_dm: algebra already has a neg table");
    FiniteAlgebra r = a;
    r.name = a.name + "dm";
    r.neg = std::vector<int>(3, 0);
    (*r.neg)[a.bot] = a.top;
    (*r.neg)[m] = m;
    (*r.neg)[a.top] = a.bot;
    return r;
}

FiniteAlgebra expand_dp(const FiniteAlgebra& a) {
    int m = middle_of_3chain(a, "expand_dp");
    if (a.neg) throw AlgebraError("expand_dp: algebra already has a neg table");
    FiniteAlgebra r = a;
    r.name = a.name + "dp";
    r.neg = std::vector<int>(3, 0);
    (*r.neg)[a.bot] = a.top;
    (*r.neg)[m] = a.top;
    (*r.neg)[a.top] = a.bot;
    return r;
}

DualPseudoResult dual_pseudocomplement_expand(const FiniteAlgebra& a) {
    if (a.neg) throw AlgebraError("dual_pseudocomplement_expand: algebra already has a neg table");
    std::vector<int> neg(a.order, -1);
    for (int x = 0; x < a.order; ++x) {
        for (int y = 0; y < a.order; ++y) {
            if (a.join[x][y] != a.top) continue;
            bool least = true;
            for (int z = 0; z < a.order; ++z)
                if (a.join[x][z] == a.top && !a.leq(y, z)) least = false;
            if (least) {
                neg[x] = y;
                break;
            }
        }
        if (neg[x] < 0) return {std::nullopt, a.label(x)};
    }
    FiniteAlgebra r = a;
    r.name = a.name + "dp";
    r.neg = std::move(neg);
    return {r, ""};
}

StoneExpandResult essentially_stone_expand(const FiniteAlgebra& a) {
    if (a.neg) throw AlgebraError("essentially_stone_expand: algebra already has a neg table");
    auto star = [&](int x) { return a.imp[x][a.bot]; };
    for (int x = 0; x < a.order; ++x)
        if (a.join[star(x)][star(star(x))] != a.top) return {std::nullopt, a.label(x)};
    FiniteAlgebra r = a;
    r.name = a.name + "e";
    r.neg = std::vector<int>(a.order);
    for (int x = 0; x < a.order; ++x) (*r.neg)[x] = star(x);
    return {r, ""};
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.has_neg() != b.has_neg())
        throw AlgebraError("product: signature mismatch (one factor lacks neg)");
    FiniteAlgebra r;
    r.name = "(" + a.name + " x " + b.name + ")";
    r.order = a.order * b.order;
    auto idx = [&](int i, int j) { return i * b.order + j; };
    r.labels.resize(r.order);
    for (int i = 0; i < a.order; ++i)
        for (int j = 0; j < b.order; ++j)
            r.labels[idx(i, j)] = "(" + a.label(i) + "," + b.label(j) + ")";
    r.bot = idx(a.bot, b.bot);
    r.top = idx(a.top, b.top);
    r.meet.assign(r.order, std::vector<int>(r.order));
    r.join.assign(r.order, std::vector<int>(r.order));
    r.imp.assign(r.order, std::vector<int>(r.order));
    if (a.has_neg()) r.neg = std::vector<int>(r.order);
    for (int i = 0; i < a.order; ++i)
        for (int j = 0; j < b.order; ++j) {
            int x = idx(i, j);
            if (r.neg) (*r.neg)[x] = idx((*a.neg)[i], (*b.neg)[j]);
            for (int k = 0; k < a.order; ++k)
                for (int l = 0; l < b.order; ++l) {
                    int y = idx(k, l);
                    r.meet[x][y] = idx(a.meet[i][k], b.meet[j][l]);
                    r.join[x][y] = idx(a.join[i][k], b.join[j][l]);
                    r.imp[x][y] = idx(a.imp[i][k], b.imp[j][l]);
                }
        }
    return r;
}

FiniteAlgebra subalgebra_generated(const FiniteAlgebra& a, const std::vector<int>& seed,
                                   const std::string& name) {
    std::set<int> elems(seed.begin(), seed.end());
    elems.insert(a.bot);
    elems.insert(a.top);
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<int> cur(elems.begin(), elems.end());
        for (int x : cur) {
            if (a.neg && elems.insert((*a.neg)[x]).second) grew = true;
            for (int y : cur) {
                if (elems.insert(a.meet[x][y]).second) grew = true;
                if (elems.insert(a.join[x][y]).second) grew = true;
                if (elems.insert(a.imp[x][y]).second) grew = true;
            }
        }
    }
    std::vector<int> order_map(elems.begin(), elems.end());
    std::vector<int> back(a.order, -1);
    for (size_t i = 0; i < order_map.size(); ++i) back[order_map[i]] = (int)i;
    FiniteAlgebra r;
    r.name = name.empty() ? a.name + "|sub" : name;
    r.order = (int)order_map.size();
    for (int e : order_map) r.labels.push_back(a.label(e));
    r.bot = back[a.bot];
    r.top = back[a.top];
    r.meet.assign(r.order, std::vector<int>(r.order));
    r.join.assign(r.order, std::vector<int>(r.order));
    r.imp.assign(r.order, std::vector<int>(r.order));
    if (a.neg) r.neg = std::vector<int>(r.order);
    for (int i = 0; i < r.order; ++i) {
        if (r.neg) (*r.neg)[i] = back[(*a.neg)[order_map[i]]];
        for (int j = 0; j < r.order; ++j) {
            r.meet[i][j] = back[a.meet[order_map[i]][order_map[j]]];
            r.join[i][j] = back[a.join[order_map[i]][order_map[j]]];
            r.imp[i][j] = back[a.imp[order_map[i]][order_map[j]]];
        }
    }
    return r;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (x > y) std::swap(x, y);
        parent[y] = x;
        return true;
    }
};

Congruence normalize(UnionFind& uf, int n) {
    Congruence c(n);
    for (int i = 0; i < n; ++i) c[i] = uf.find(i);
    return c;
}

// Smallest congruence containing every pair already merged in uf.
void close_congruence(const FiniteAlgebra& a, UnionFind& uf) {
    const int n = a.order;
    for (bool grew = true; grew;) {
        grew = false;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (uf.find(u) != uf.find(v)) continue;
                if (a.neg && uf.unite((*a.neg)[u], (*a.neg)[v])) grew = true;
                for (int w = 0; w < n; ++w) {
                    if (uf.unite(a.meet[u][w], a.meet[v][w])) grew = true;
                    if (uf.unite(a.join[u][w], a.join[v][w])) grew = true;
                    if (uf.unite(a.imp[u][w], a.imp[v][w])) grew = true;
                    if (uf.unite(a.imp[w][u], a.imp[w][v])) grew = true;
                }
            }
    }
}

}  // namespace

bool is_congruence(const FiniteAlgebra& a, const Congruence& c) {
    const int n = a.order;
    if ((int)c.size() != n) return false;
    for (int i = 0; i < n; ++i)
        if (c[i] < 0 || c[i] >= n || c[c[i]] != c[i] || c[i] > i) return false;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (c[u] != c[v]) continue;
            if (a.neg && c[(*a.neg)[u]] != c[(*a.neg)[v]]) return false;
            for (int w = 0; w < n; ++w) {
                if (c[a.meet[u][w]] != c[a.meet[v][w]]) return false;
                if (c[a.join[u][w]] != c[a.join[v][w]]) return false;
                if (c[a.imp[u][w]] != c[a.imp[v][w]]) return false;
                if (c[a.imp[w][u]] != c[a.imp[w][v]]) return false;
            }
        }
    return true;
}

std::vector<Congruence> congruences(const FiniteAlgebra& a) {
    const int n = a.order;
    std::set<Congruence> all;
    UnionFind delta(n);
    all.insert(normalize(delta, n));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            UnionFind uf(n);
            uf.unite(x, y);
            close_congruence(a, uf);
            all.insert(normalize(uf, n));
        }
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Congruence> cur(all.begin(), all.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                UnionFind uf(n);
                for (int e = 0; e < n; ++e) {
                    uf.unite(e, cur[i][e]);
                    uf.unite(e, cur[j][e]);
                }
                close_congruence(a, uf);
                if (all.insert(normalize(uf, n)).second) grew = true;
            }
    }
    return {all.begin(), all.end()};
}

FiniteAlgebra quotient(const FiniteAlgebra& a, const Congruence& c) {
    if (!is_congruence(a, c)) throw AlgebraError("quotient: partition is not a congruence");
    std::vector<int> reps;
    for (int e = 0; e < a.order; ++e)
        if (c[e] == e) reps.push_back(e);
    std::vector<int> cls(a.order);
    for (int e = 0; e < a.order; ++e)
        cls[e] = (int)(std::lower_bound(reps.begin(), reps.end(), c[e]) - reps.begin());
    FiniteAlgebra r;
    r.name = a.name + "/q";
    r.order = (int)reps.size();
    for (int e : reps) r.labels.push_back(a.label(e));
    r.bot = cls[a.bot];
    r.top = cls[a.top];
    r.meet.assign(r.order, std::vector<int>(r.order));
    r.join.assign(r.order, std::vector<int>(r.order));
    r.imp.assign(r.order, std::vector<int>(r.order));
    if (a.neg) r.neg = std::vector<int>(r.order);
    for (int i = 0; i < r.order; ++i) {
        if (r.neg) (*r.neg)[i] = cls[(*a.neg)[reps[i]]];
        for (int j = 0; j < r.order; ++j) {
            r.meet[i][j] = cls[a.meet[reps[i]][reps[j]]];
            r.join[i][j] = cls[a.join[reps[i]][reps[j]]];
            r.imp[i][j] = cls[a.imp[reps[i]][reps[j]]];
        }
    }
    return r;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

}  // namespace

FiniteAlgebra parse_algebra_file(const std::string& text) {
    std::vector<std::pair<int, std::vector<std::string>>> lines;
    {
        std::istringstream in(text);
        std::string line;
        int no = 0;
        while (std::getline(in, line)) {
            ++no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto toks = split_ws(line);
            if (!toks.empty()) lines.emplace_back(no, std::move(toks));
        }
    }
    size_t pos = 0;
    auto fail = [&](const std::string& msg) -> AlgebraError {
        int no = pos < lines.size() ? lines[pos].first : (lines.empty() ? 0 : lines.back().first);
        return AlgebraError("algebra file line " + std::to_string(no) + ": " + msg);
    };
    auto next = [&]() -> const std::vector<std::string>& {
        if (pos >= lines.size()) throw fail("unexpected end of file");
        return lines[pos].second;
    };
    auto keyword = [&](const std::string& kw, size_t args) -> std::vector<std::string> {
        auto toks = next();
        std::string head = toks[0];
        if (!head.empty() && head.back() == ':') head.pop_back();
        if (head != kw) throw fail("expected '" + kw + "', found '" + toks[0] + "'");
        if (args != SIZE_MAX && toks.size() != args + 1)
            throw fail("'" + kw + "' expects " + std::to_string(args) + " argument(s)");
        ++pos;
        return {toks.begin() + 1, toks.end()};
    };

    FiniteAlgebra a;
    a.name = keyword("algebra", 1)[0];
    try {
        a.order = std::stoi(keyword("order", 1)[0]);
    } catch (const std::exception&) {
        throw fail("order must be an integer");
    }
    if (a.order < 1 || a.order > 64) throw fail("order out of supported range 1..64");
    a.labels = keyword("elements", a.order);
    auto want_elem = [&](const std::string& lbl) {
        int e = a.element(lbl);
        if (e < 0) throw fail("unknown element label '" + lbl + "'");
        return e;
    };
    a.bot = want_elem(keyword("bottom", 1)[0]);
    a.top = want_elem(keyword("top", 1)[0]);
    auto read_table = [&](const std::string& kw) {
        keyword(kw, 0);
        std::vector<std::vector<int>> t;
        for (int r = 0; r < a.order; ++r) {
            auto row = next();
            if ((int)row.size() != a.order)
                throw fail(kw + " row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(a.order));
            std::vector<int> out;
            for (const auto& lbl : row) out.push_back(want_elem(lbl));
            t.push_back(std::move(out));
            ++pos;
        }
        return t;
    };
    a.meet = read_table("meet");
    a.join = read_table("join");
    a.imp = read_table("imp");
    if (pos < lines.size()) {
        keyword("neg", 0);
        auto row = next();
        if ((int)row.size() != a.order) throw fail("neg row has wrong width");
        std::vector<int> out;
        for (const auto& lbl : row) out.push_back(want_elem(lbl));
        a.neg = std::move(out);
        ++pos;
    }
    if (pos < lines.size()) throw fail("trailing content after algebra definition");
    if (auto err = validate_algebra(a)) throw AlgebraError("algebra '" + a.name + "': " + *err);
    return a;
}

std::string render_algebra_file(const FiniteAlgebra& a) {
    std::ostringstream out;
    out << "algebra " << a.name << "\n";
    out << "order " << a.order << "\n";
    out << "elements";
    for (const auto& l : a.labels) out << " " << l;
    out << "\n";
    out << "bottom " << a.label(a.bot) << "\n";
    out << "top " << a.label(a.top) << "\n";
    auto table = [&](const char* kw, const std::vector<std::vector<int>>& t) {
        out << kw << "\n";
        for (const auto& row : t) {
            for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << a.label(row[i]);
            out << "\n";
        }
    };
    table("meet", a.meet);
    table("join", a.join);
    table("imp", a.imp);
    if (a.neg) {
        out << "neg\n";
        for (size_t i = 0; i < a.neg->size(); ++i)
            out << (i ? " " : "") << a.label((*a.neg)[i]);
        out << "\n";
    }
    return out.str();
}

}  // namespace shlab
