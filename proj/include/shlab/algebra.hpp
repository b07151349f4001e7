#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shlab/formula.hpp"

namespace shlab {

// Operation-table algebra over carrier {0..n-1} with distinguished bottom/top
// indices. The neg table is optional: plain semi-Heyting algebras carry none,
// and evaluating ' on them is a reported error rather than a silent default.
struct FiniteAlgebra {
    std::string name;
    int order = 0;
    std::vector<std::string> labels;
    int bot = 0;
    int top = 0;
    std::vector<std::vector<int>> meet;
    std::vector<std::vector<int>> join;
    std::vector<std::vector<int>> imp;
    std::optional<std::vector<int>> neg;

    bool has_neg() const { return neg.has_value(); }
    bool leq(int a, int b) const { return meet[a][b] == a; }
    const std::string& label(int e) const { return labels[e]; }
    int element(const std::string& lbl) const;  // -1 when unknown
};

// Raised when a table is malformed or a lattice law fails at load time.
class AlgebraError : public std::runtime_error {
  public:
    explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a formula uses ' on an algebra without a neg table.
class MissingNegation : public std::runtime_error {
  public:
    explicit MissingNegation(const std::string& algebra)
        : std::runtime_error("algebra '" + algebra + "' has no neg table but formula uses '"),
          algebra(algebra) {}
    std::string algebra;
};

using Valuation = std::map<std::string, int>;

// Structural sanity plus bounded-lattice laws for meet/join/bot/top.
// Returns an explanation on failure, nullopt when the algebra is valid.
std::optional<std::string> validate_algebra(const FiniteAlgebra& a);

// Fold a formula through the tables. Throws UnboundVariable / MissingNegation.
int evaluate(const Formula& f, const FiniteAlgebra& a, const Valuation& v);
int evaluate(const FormulaPtr& f, const FiniteAlgebra& a, const Valuation& v);

// SH2: x&(x->y) = x&y; SH3: x&(y->z) = x&((x&y)->(x&z)); SH4: x->x = 1.
// The bounded-lattice part (SH1) is enforced by validate_algebra.
struct SemiHeytingReport {
    bool pass = true;
    std::string failed_law;        // "SH2" | "SH3" | "SH4"
    std::vector<int> witness;      // element indices for the failing tuple
    std::string describe(const FiniteAlgebra& a) const;
};
SemiHeytingReport is_semiheyting(const FiniteAlgebra& a);

// Bijection preserving meet/join/imp/neg/bot/top, as a vector: image of each
// element of a in b. Algebras with and without neg tables are never isomorphic.
std::optional<std::vector<int>> isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

// All semi-Heyting algebras of the given order, one per isomorphism class,
// in canonical form (lexicographically least tables over permutations fixing
// bot and top). Cap guards the doubly exponential lattice/table search.
std::vector<FiniteAlgebra> enumerate_sh(int order, int cap = 4);

// dm: a'=a on the middle element; dp: a'=1. Only defined for 3-element chains,
// mirroring how the twenty 3-element expansions are introduced.
FiniteAlgebra expand_dm(const FiniteAlgebra& a);
FiniteAlgebra expand_dp(const FiniteAlgebra& a);

// x' := least y with x|y = top, when such a least element exists for every x.
struct DualPseudoResult {
    std::optional<FiniteAlgebra> algebra;
    std::string missing_for;  // label of an x with no least complement-witness
};
DualPseudoResult dual_pseudocomplement_expand(const FiniteAlgebra& a);

// x' := x* (= x->0) on an algebra satisfying the Stone identity x*|x** = 1.
struct StoneExpandResult {
    std::optional<FiniteAlgebra> algebra;
    std::string stone_witness;  // label of an x with x*|x** != 1
};
StoneExpandResult essentially_stone_expand(const FiniteAlgebra& a);

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);

// Closure of seed (plus bot/top) under all operations; labels are inherited.
FiniteAlgebra subalgebra_generated(const FiniteAlgebra& a, const std::vector<int>& seed,
                                   const std::string& name = "");

// A congruence as a partition: cls[e] is the class id of element e, class ids
// are least member indices.
using Congruence = std::vector<int>;
std::vector<Congruence> congruences(const FiniteAlgebra& a);
bool is_congruence(const FiniteAlgebra& a, const Congruence& c);
FiniteAlgebra quotient(const FiniteAlgebra& a, const Congruence& c);

// Line-oriented algebra file format (see docs/formats in README).
FiniteAlgebra parse_algebra_file(const std::string& text);
std::string render_algebra_file(const FiniteAlgebra& a);

}  // namespace shlab
