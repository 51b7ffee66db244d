#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "operad_forge/element.hpp"
#include "operad_forge/permutation.hpp"

namespace operad_forge {

/// A bracket expression. Leaves are labels (degree 0), formal odd symbols
/// delta_k (degree +1), derivation words applied to a label ("d2.d1(3)",
/// degree = letter count), or the left-normed compounds {delta_k, l_1,
/// ..., l_f} produced by the elimination theorem (degree +1).
class BracketWord {
public:
    enum class Kind { Label, Delta, Derived, TLetter, Bracket };

    static BracketWord label(int l);
    static BracketWord delta(int k);
    static BracketWord derived(std::vector<int> word, int l);
    static BracketWord tletter(int k, std::vector<int> labels);
    static BracketWord bracket(BracketWord a, BracketWord b);

    /// Left-normed {{..{x1,x2},..},xn}.
    static BracketWord left_fold(const std::vector<BracketWord>& xs);
    static BracketWord left_fold_labels(const std::vector<int>& labels);

    Kind kind() const { return kind_; }
    int index() const { return index_; }               // label / delta / tletter index
    const std::vector<int>& word() const { return word_; }  // derivation letters or tletter labels
    const BracketWord& left() const { return *left_; }
    const BracketWord& right() const { return *right_; }

    int degree() const;
    int leaf_count() const;
    void collect_labels(std::vector<int>& out) const;  // label leaves, reading order

    /// Weight: w(delta_k) = k+1, labels weigh 0, each bracket -1,
    /// derivation letters d_k weigh k.
    int weight() const;

    /// Replaces each derivation-word leaf d_{k_1}..d_{k_f}(l) by the
    /// bracket chain {delta_{k_1}, {..., {delta_{k_f}, l}}} (innermost
    /// letter bracketed first). Preserves weight.
    BracketWord adjoint_embed() const;

    /// Expands each TLetter back into its left-normed bracket chain.
    BracketWord expand_tletters() const;

    std::string text() const;
    static BracketWord parse(const std::string& s);

    bool operator<(const BracketWord& o) const;
    bool operator==(const BracketWord& o) const;

private:
    BracketWord() = default;
    Kind kind_ = Kind::Label;
    int index_ = 0;
    std::vector<int> word_;
    std::shared_ptr<const BracketWord> left_, right_;
};

using BracketCombo = std::map<BracketWord, Scalar>;

/// Multilinear expansion into the free (graded) associative algebra:
/// {A,B} = AB - (-1)^{|A||B|} BA on leaf sequences. Two bracket
/// expressions are equal in the free Lie algebra iff their expansions
/// agree (PBW embedding, characteristic zero).
using AssocWord = std::vector<std::string>;  // sequence of leaf encodings
std::map<AssocWord, Scalar> assoc_expand(const BracketWord& w);
std::map<AssocWord, Scalar> assoc_expand(const BracketCombo& c);

/// Right-normed basis element of Lie(n): the bracket
/// {seq[0], {seq[1], ..., {seq[n-2], seq[n-1]}}} with seq a permutation of
/// 1..n whose last entry is n.
struct LieKey {
    std::vector<int> seq;

    int arity() const { return static_cast<int>(seq.size()); }
    BracketWord to_word() const;
    auto operator<=>(const LieKey&) const = default;
};

/// The Lie operad with exact normal forms in the right-normed basis.
class LieOperad {
public:
    using Key = LieKey;
    using Elt = Element<LieKey>;

    static int key_degree(const Key&) { return 0; }

    Elt unit() const { return Elt(LieKey{{1}}, 1); }
    std::vector<LieKey> basis(int n) const;

    /// Expansion of a label-linear bracket word in the right-normed basis
    /// (unique; antisymmetry and Jacobi hold after normalization).
    Elt normalize(const BracketWord& w) const;
    Elt normalize(const BracketCombo& c) const;

    Elt compose_keys(const LieKey& p, int i, const LieKey& q) const;
    Elt compose(const Elt& p, int i, const Elt& q) const;
    Elt act_key(const Permutation& sigma, const LieKey& k) const;
    Elt act(const Permutation& sigma, const Elt& e) const;

    /// dim Lie(n) = (n-1)!.
    static Int lie_dim(int n);

    /// Rank of the expansion matrix of the right-normed basis inside the
    /// n!-dimensional multilinear associative space (equals lie_dim(n)).
    static int expansion_rank(int n);
};

/// Output of the elimination rewriting: a combination of brackets of
/// T-letters plus a pure-label remainder.
struct Decomposition {
    BracketCombo t_part;  // monomials whose leaves are all TLetters
    BracketCombo n_part;  // monomials whose leaves are all labels
};

/// Rewrites a bracket word over the alphabet {delta_k} u {labels} into
/// F_Lie(T) + F_Lie(N) via graded antisymmetry and Jacobi; the result
/// re-expands to the input.
Decomposition eliminate(const BracketWord& w);
Decomposition eliminate(const BracketCombo& c);

}  // namespace operad_forge
