#pragma once

#include <string>
#include <vector>

#include "operad_forge/element.hpp"
#include "operad_forge/permutation.hpp"

namespace operad_forge {

/// An n-tuple of words over the odd 1-ary letters d_k. Slot i holds the
/// word acting on input i, outermost letter first. Letter index 0 (d_0)
/// only occurs in the Q model of sPerm; the deformation operad D uses
/// d_1, d_2, ...
struct WordTuple {
    std::vector<std::vector<int>> slots;

    int arity() const { return static_cast<int>(slots.size()); }
    int degree() const {  // total letter count
        int d = 0;
        for (auto& w : slots) d += static_cast<int>(w.size());
        return d;
    }
    int letter_index_sum() const {
        int s = 0;
        for (auto& w : slots)
            for (int l : w) s += l;
        return s;
    }
    /// w(d_k) = k, w(1^{tensor n}) = 1 - n.
    int weight() const { return letter_index_sum() + 1 - arity(); }

    static WordTuple empty(int n) { return WordTuple{std::vector<std::vector<int>>(n)}; }

    /// Canonical order: arity, then degree, then longest-word length, then
    /// the per-slot length vector (descending lexicographically, so terms
    /// spread over the slots come before stacked ones within a length
    /// class), then the letters themselves. This reproduces the order in
    /// which the bases of D(2) and D^2(3) are conventionally listed.
    bool operator<(const WordTuple& o) const;
    bool operator==(const WordTuple& o) const { return slots == o.slots; }

    std::string text() const;                       // "d1.d2|1|d3"
    static WordTuple parse(const std::string& s);   // throws with 1-based offset
};

/// The suboperads of T(V, commutative product)/(derivation relations)
/// realized on word tuples: the deformation operad D (letters d_1, d_2,
/// ...) and the Q model of sPerm (single square-zero letter d_0).
class WordOperad {
public:
    enum class Mode { DInfinity, Q };

    explicit WordOperad(Mode m) : mode_(m) {}
    Mode mode() const { return mode_; }

    using Key = WordTuple;
    using Elt = Element<WordTuple>;

    static int key_degree(const Key& k) { return k.degree(); }

    Elt unit() const { return Elt(WordTuple::empty(1), 1); }

    /// Partial composition: the word in slot i of p distributes over the
    /// slots of q letter by letter (innermost first) with graded Leibniz
    /// signs; the incoming q additionally passes the words of p to the
    /// right of slot i. In Q mode, d_0 d_0 = 0 prunes terms.
    Elt compose_keys(const WordTuple& p, int i, const WordTuple& q) const;
    Elt compose(const Elt& p, int i, const Elt& q) const;

    /// Slot relabeling by sigma with the Koszul sign of reordering the
    /// slot words.
    Elt act_key(const Permutation& sigma, const WordTuple& t) const;
    Elt act(const Permutation& sigma, const Elt& e) const;

    /// Distributes one extra letter over the slots (graded Leibniz); this
    /// is the operator "d_k . (-)" used by the Q model (k = 0) and by the
    /// derived-bracket displays.
    Elt apply_letter(int letter, const WordTuple& t) const;

    /// The differential of D: each letter d_n is replaced by
    /// -sum_{i+j=n} d_i d_j in place, with graded signs across slots and
    /// positions. Only valid in DInfinity mode.
    Elt differential_key(const WordTuple& t) const;
    Elt differential(const Elt& e) const;

private:
    Mode mode_;
};

/// All weight-zero n-tuples (letter indices summing to n-1) of degree a,
/// in canonical order. basis_D(n) stacks the degrees a = 1 .. n-1;
/// for n = 1 the single empty tuple is returned.
std::vector<WordTuple> basis_D(int n, int a);
std::vector<WordTuple> basis_D(int n);

/// The n tuples with one d_0 in every slot but one (the basis of
/// sPerm(n) inside Q).
std::vector<WordTuple> basis_sperm(int n);

/// Letter multiplicities lambda_1..lambda_{n-1} of d_1..d_{n-1};
/// a = sum lambda_i is the degree.
struct LambdaProfile {
    std::vector<Int> lambda;

    Int degree() const;           // sum of multiplicities
    Int weighted_sum() const;     // sum i * lambda_i, must equal n-1
};

/// dim Delta^{(lambda)}(n) = C(n+a-1, a) * a!/(prod lambda_i!).
Int dim_delta(const LambdaProfile& profile, int n);

/// dim D^a(n) = C(n+a-1, a) * C(n-2, a-1).
Int dim_formula(int n, int a);

/// All profiles satisfying the two membership constraints for D^a(n).
std::vector<LambdaProfile> lambda_profiles(int n, int a);

/// Exact homology dimensions (dim H^a for a = 1..n-1) of the complex
/// (D^1(n) -> ... -> D^{n-1}(n), differential). Expected: zero below the
/// top degree and n at the top.
std::vector<int> homology_D(int n, int max_arity = 5);

}  // namespace operad_forge
