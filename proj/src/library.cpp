#include "shlab/library.hpp"

#include <array>
#include <stdexcept>

namespace shlab {

namespace {

FiniteAlgebra chain_skeleton(const std::string& name, int n) {
    FiniteAlgebra a;
    a.name = name;
    a.order = n;
    a.labels.resize(n);
    a.labels[0] = "0";
    a.labels[n - 1] = "1";
    for (int i = 1; i + 1 < n; ++i) a.labels[i] = std::string(1, char('a' + i - 1));
    a.bot = 0;
    a.top = n - 1;
    a.meet.assign(n, std::vector<int>(n));
    a.join.assign(n, std::vector<int>(n));
    a.imp.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            a.meet[x][y] = std::min(x, y);
            a.join[x][y] = std::max(x, y);
        }
    return a;
}

FiniteAlgebra heyting_chain(const std::string& name, int n) {
    FiniteAlgebra a = chain_skeleton(name, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) a.imp[x][y] = x <= y ? a.top : y;
    return a;
}

// Mirror involution i -> n-1-i; the De Morgan expansion of a chain.
FiniteAlgebra chain_mirror_neg(const FiniteAlgebra& chain) {
    FiniteAlgebra a = chain;
    a.name = chain.name + "dm";
    a.neg = std::vector<int>(a.order);
    for (int i = 0; i < a.order; ++i) (*a.neg)[i] = a.order - 1 - i;
    return a;
}

// The ten 3-element semi-Heyting implication tables over the chain 0 < a < 1;
// rows are the left argument in order 0, a, 1.
FiniteAlgebra three_chain(const std::string& name, const std::array<std::array<int, 3>, 3>& imp) {
    FiniteAlgebra a = chain_skeleton(name, 3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) a.imp[x][y] = imp[x][y];
    return a;
}

constexpr int O = 0, A = 1, I = 2;  // 3-chain elements 0 < a < 1

const std::array<std::array<std::array<int, 3>, 3>, 10> kThreeChainImps = {{
    {{{I, I, I}, {O, I, I}, {O, A, I}}},  // L1
    {{{I, A, I}, {O, I, I}, {O, A, I}}},  // L2
    {{{I, I, I}, {O, I, A}, {O, A, I}}},  // L3
    {{{I, A, I}, {O, I, A}, {O, A, I}}},  // L4
    {{{I, A, A}, {O, I, I}, {O, A, I}}},  // L5
    {{{I, I, A}, {O, I, I}, {O, A, I}}},  // L6
    {{{I, A, A}, {O, I, A}, {O, A, I}}},  // L7
    {{{I, I, A}, {O, I, A}, {O, A, I}}},  // L8
    {{{I, O, O}, {O, I, I}, {O, A, I}}},  // L9
    {{{I, O, O}, {O, I, A}, {O, A, I}}},  // L10
}};

// The four-element algebras D1..D3: Boolean lattice 0 < a,b < 1 with a,b
// incomparable, neg fixing a and b and swapping the bounds.
FiniteAlgebra diamond(const std::string& name, const std::array<std::array<int, 4>, 4>& imp) {
    FiniteAlgebra d;
    d.name = name;
    d.order = 4;
    d.labels = {"0", "a", "b", "1"};
    d.bot = 0;
    d.top = 3;
    auto mt = [](int x, int y) -> int {
        if (x == y) return x;
        if (x == 0 || y == 0) return 0;
        if (x == 3) return y;
        if (y == 3) return x;
        return 0;  // distinct middles
    };
    d.meet.assign(4, std::vector<int>(4));
    d.join.assign(4, std::vector<int>(4));
    d.imp.assign(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            d.meet[x][y] = mt(x, y);
            d.join[x][y] = 3 - mt(3 - x, 3 - y);
            d.imp[x][y] = imp[x][y];
        }
    d.neg = std::vector<int>{3, 1, 2, 0};
    return d;
}

constexpr int DB = 2, DI = 3;  // diamond: 0, a=1, b=2, 1=3

// Rows/columns in carrier order 0, a, b, 1.
const std::array<std::array<int, 4>, 4> kD1Imp = {{
    {DI, DB, A, O},
    {DB, DI, O, A},
    {A, O, DI, DB},
    {O, A, DB, DI},
}};
const std::array<std::array<int, 4>, 4> kD2Imp = {{
    {DI, DI, DI, DI},
    {DB, DI, DB, DI},
    {A, A, DI, DI},
    {O, A, DB, DI},
}};
const std::array<std::array<int, 4>, 4> kD3Imp = {{
    {DI, DI, A, A},
    {DB, DI, O, A},
    {A, A, DI, DI},
    {O, A, DB, DI},
}};

std::vector<FiniteAlgebra> build_library() {
    std::vector<FiniteAlgebra> lib;

    FiniteAlgebra two = chain_skeleton("2", 2);
    two.imp = {{1, 1}, {0, 1}};
    FiniteAlgebra two_bar = chain_skeleton("2b", 2);
    two_bar.imp = {{1, 0}, {0, 1}};

    FiniteAlgebra two_e = two;
    two_e.name = "2e";
    two_e.neg = std::vector<int>{1, 0};
    FiniteAlgebra two_be = two_bar;
    two_be.name = "2be";
    two_be.neg = std::vector<int>{1, 0};
    lib.push_back(two_e);
    lib.push_back(two_be);

    std::vector<FiniteAlgebra> base;
    for (int i = 0; i < 10; ++i)
        base.push_back(three_chain("L" + std::to_string(i + 1), kThreeChainImps[i]));
    for (const auto& l : base) lib.push_back(l);
    for (const auto& l : base) lib.push_back(expand_dm(l));
    for (const auto& l : base) lib.push_back(expand_dp(l));

    lib.push_back(diamond("D1", kD1Imp));
    lib.push_back(diamond("D2", kD2Imp));
    lib.push_back(diamond("D3", kD3Imp));

    std::vector<FiniteAlgebra> chains;
    for (int n = 2; n <= 5; ++n) chains.push_back(heyting_chain("Ch" + std::to_string(n), n));
    for (const auto& c : chains) lib.push_back(c);
    for (const auto& c : chains) lib.push_back(chain_mirror_neg(c));
    for (const auto& c : chains) {
        auto r = dual_pseudocomplement_expand(c);
        if (!r.algebra) throw std::logic_error("chain lacks dual pseudocomplements");
        lib.push_back(*r.algebra);
    }

    for (const auto& a : lib)
        if (auto err = validate_algebra(a))
            throw std::logic_error("library algebra " + a.name + ": " + *err);
    return lib;
}

}  // namespace

const std::vector<FiniteAlgebra>& library() {
    static const std::vector<FiniteAlgebra> lib = build_library();
    return lib;
}

const FiniteAlgebra* library_find(const std::string& name) {
    for (const auto& a : library())
        if (a.name == name) return &a;
    return nullptr;
}

std::vector<const FiniteAlgebra*> library_dhmsh() {
    std::vector<const FiniteAlgebra*> out;
    for (const char* n : {"2e", "2be"}) out.push_back(library_find(n));
    for (const char* sfx : {"dm", "dp"})
        for (int i = 1; i <= 10; ++i)
            out.push_back(library_find("L" + std::to_string(i) + sfx));
    for (const char* n : {"D1", "D2", "D3"}) out.push_back(library_find(n));
    return out;
}

std::vector<const FiniteAlgebra*> library_heyting_chains() {
    std::vector<const FiniteAlgebra*> out;
    for (const auto& a : library()) {
        bool total = true;
        for (int x = 0; x < a.order && total; ++x)
            for (int y = 0; y < a.order && total; ++y)
                if (!a.leq(x, y) && !a.leq(y, x)) total = false;
        if (!total) continue;
        bool heyting = true;
        for (int x = 0; x < a.order && heyting; ++x)
            for (int y = 0; y < a.order && heyting; ++y)
                if (a.imp[a.meet[x][y]][x] != a.top) heyting = false;
        if (heyting) out.push_back(&a);
    }
    return out;
}

}  // namespace shlab
