#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "operad_forge/permutation.hpp"
#include "operad_forge/rational.hpp"

namespace operad_forge {

/// Planar rooted tree with every internal vertex of arity >= 2, encoded as
/// its preorder arity word: k >= 2 for a vertex with k children, 0 for a
/// leaf. The encoding is canonical, so tree equality is word equality and
/// the enumeration order below is the lexicographic order of the words.
class PlanarTree {
public:
    PlanarTree() : code_{0} {}  // single leaf
    explicit PlanarTree(std::vector<int> code);

    static PlanarTree leaf() { return PlanarTree(); }
    static PlanarTree corolla(int arity);

    const std::vector<int>& code() const { return code_; }
    int leaf_count() const;
    int vertex_count() const;
    bool is_leaf() const { return code_.size() == 1 && code_[0] == 0; }
    int root_arity() const { return code_[0]; }

    /// Children of the root, in planar order (empty for a leaf).
    std::vector<PlanarTree> children() const;
    static PlanarTree from_children(int arity, const std::vector<PlanarTree>& ch);

    /// Multiplicity vector of vertex arities: result[k] = number of
    /// internal vertices with k children.
    std::map<int, int> arity_multiset() const;

    /// Grafts `g` onto the i-th leaf (planar order, 1-based).
    PlanarTree graft(int i, const PlanarTree& g) const;

    /// Text form "(..(...))" with "." per leaf; parse accepts the unicode
    /// bullet as well.
    std::string text() const;
    static PlanarTree parse(const std::string& s);

    auto operator<=>(const PlanarTree&) const = default;

private:
    std::vector<int> code_;
};

/// A planar tree together with a permutation of 1..n on its leaves in
/// planar (left-to-right) order.
struct LabeledTree {
    PlanarTree shape;
    Permutation labels;

    LabeledTree(PlanarTree s, Permutation l);
    int leaf_count() const { return labels.size(); }

    /// Operadic grafting at the leaf carrying label i: graft labels shift
    /// into the block {i, .., i+k-1}, host labels above i shift up.
    LabeledTree graft(int i, const LabeledTree& g) const;

    auto operator<=>(const LabeledTree&) const = default;
};

/// All planar rooted trees with n leaves, in canonical (code-lex) order;
/// the length of the result is schroeder(n).
std::vector<PlanarTree> enumerate_trees(int n);

/// Small Schroeder number: the count of planar rooted trees with n leaves,
/// computed by the standard three-term recurrence (independent of the
/// enumeration above).
Int schroeder(int n);

/// Multiset of corollas: lambda[i-1] copies of the (i+1)-ary corolla.
struct CorollaMultiset {
    std::vector<Int> lambda;

    Int total_copies() const;  // Lambda = sum of multiplicities
    Int leaf_count() const;    // |T| = sum i*lambda_i + 1
};

/// Number of trees assembled from exactly the given corolla multiset:
/// (1/|T|) * C(|T|+Lambda-1, Lambda) * Lambda!/(prod lambda_i!).
Int count_trees_from_corollas(const CorollaMultiset& c);

/// Number of k-ary trees with m vertices; equals
/// count_trees_from_corollas({c_k : m}) and C(km, m)/((k-1)m+1).
Int fuss_catalan(int k, int m);

}  // namespace operad_forge
