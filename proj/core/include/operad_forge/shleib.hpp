#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>

#include "operad_forge/lie.hpp"
#include "operad_forge/operads.hpp"
#include "operad_forge/trees.hpp"
#include "operad_forge/words.hpp"

namespace operad_forge {

/// Basis monomial of the free operad on the corolla generators T_k
/// (k >= 2, one odd generator per arity with regular orbit): a planar
/// shape whose internal vertices are read as corollas in depth-first
/// order, with the leaf labels carried separately. The depth-first vertex
/// order fixes the sign normalization: a monomial in this form has
/// coefficient +1 relative to the left-to-right composite of its
/// generators.
struct TreeMonKey {
    PlanarTree shape;
    Permutation labels;

    int arity() const { return labels.size(); }
    auto operator<=>(const TreeMonKey&) const = default;

    std::string text() const;  // nested functional form, e.g. "T2(T3(1,2,4),3)"
    /// Accepts the functional form and grafting chains
    /// "T2(1,2)@1:T3(1,2,3)" (left-associative partial composition).
    static TreeMonKey parse(const std::string& s);
};

/// The free operad on the corollas, i.e. sLeib-infinity before the
/// differential; tree_diff makes it the sh-Leibniz operad.
class ShLeibOperad {
public:
    using Key = TreeMonKey;
    using Elt = Element<TreeMonKey>;

    static int key_degree(const Key& k) { return k.shape.vertex_count(); }

    Elt unit() const {
        return Elt(TreeMonKey{PlanarTree::leaf(), Permutation::identity(1)}, 1);
    }

    static Key corolla(int k, Permutation labels);
    static Key corolla(int k) { return corolla(k, Permutation::identity(k)); }

    /// All tree monomials of arity n: s(n) shapes times n! labelings.
    std::vector<Key> basis(int n) const;

    /// Grafting with the Koszul sign of moving q's (odd) vertices past the
    /// vertices of p that follow the grafted leaf in depth-first order.
    Elt compose_keys(const Key& p, int i, const Key& q) const;
    Elt compose(const Elt& p, int i, const Elt& q) const;

    /// Leaf relabeling; labels are even, so no sign.
    Elt act_key(const Permutation& sigma, const Key& k) const;
    Elt act(const Permutation& sigma, const Elt& e) const;

    /// The tree differential: every vertex T_n splits into the signed sum
    /// of two-vertex trees T_i o T_j over unshuffled label blocks, extended
    /// as a degree +1 derivation in the depth-first vertex order.
    /// Squares to zero.
    Elt tree_diff_key(const Key& k) const;
    Elt tree_diff(const Elt& e) const;
};

/// Basis of the free operad over a family of regular-orbit generators,
/// one generator per arity in `generator_arities` (all >= 2): the shapes
/// with admissible vertex arities times all leaf labelings.
std::vector<TreeMonKey> free_operad_basis(const std::set<int>& generator_arities, int n);

/// Lie tensor D-infinity and Lie tensor the Q model of sPerm.
using LieDOperad = HadamardOperad<LieOperad, WordOperad>;
using LieDKey = PairKey<LieOperad, WordOperad>;
using LieDElt = Element<LieDKey>;

LieDOperad make_lie_d();   // Lie (x) D_infinity
LieDOperad make_lie_q();   // Lie (x) Q, houses Lie (x) sPerm

/// The operadic morphism theta: a corolla T_n(l_1..l_n) goes to the
/// normal higher derived bracket {d_{n-1}(l_1), l_2, ..., l_n}, i.e. the
/// left-normed Lie word paired with the word tuple carrying d_{n-1} in
/// slot l_1; composites of corollas go to the matching composites in
/// Lie (x) D.
class ThetaMap {
public:
    ThetaMap();

    const LieDOperad& target() const { return lie_d_; }

    LieDElt apply_key(const TreeMonKey& k) const;
    LieDElt apply(const Element<TreeMonKey>& e) const;

    /// identity (x) differential on the target.
    LieDElt target_diff(const LieDElt& e) const;

private:
    LieDOperad lie_d_;
};

/// Hadamard basis of (Lie x D)(n): right-normed keys times basis_D(n).
std::vector<LieDKey> lie_d_basis(int n);

/// One machine-checkable verification outcome.
struct Report {
    std::string check;
    int arity = 0;
    std::string expected;
    std::string actual;
    bool pass = false;
    std::optional<std::string> witness;
    bool skipped = false;
};

/// Dimension-and-rank verification of theta at arity n: the tree side
/// (n! * s(n) monomials), the Hadamard side ((n-1)! * dim D(n) keys), and
/// the rank of theta must all agree. Blocks by letter multiset keep the
/// matrices small.
Report verify_iso(int n, int max_arity = 5);

/// Chain-map verification: theta(tree_diff x) = (id (x) d)(theta x) on
/// every basis monomial of arity n.
Report verify_chain_map(int n, int max_arity = 4);

/// The binary model: the odd Leibniz identity of the derived bracket in
/// Lie (x) sPerm, the well-definedness of d_0{1,2}, and the dimension
/// count n! up to max_n.
Report binary_leibniz_check(int max_n = 6);

/// Splits tree_diff(T_n) into the identity-unshuffle part and the rest;
/// the regular term count equals the associahedron-style count
/// sum_{i+j-1=n} i.
struct RegularPartReport {
    Report report;
    Element<TreeMonKey> regular;
    Element<TreeMonKey> non_regular;
};
RegularPartReport regular_part(int n, int max_arity = 8);

/// All splittings of the cofree-Zinbiel coproduct on a word
/// x_1..x_{n+1} with the given degrees: (left block, right block
/// ending in x_{n+1}, Koszul sign), over (i, n-i)-unshuffles.
struct ZinbielSplit {
    std::vector<int> left, right;
    Scalar sign;
};
std::vector<ZinbielSplit> zinbiel_coproduct(std::span<const int> degrees);

}  // namespace operad_forge
