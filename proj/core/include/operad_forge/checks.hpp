#pragma once

#include <cstdint>
#include <vector>

#include "operad_forge/shleib.hpp"

namespace operad_forge {

// Verification suites behind `operad-forge verify` and the acceptance
// tests. Every check returns a Report; nothing here throws on a failed
// identity, only on misuse or resource bounds.

/// Table 1 against the recurrence and the enumeration (enumeration up to
/// `enum_n`).
Report check_schroeder_table(int max_n = 10, int enum_n = 8);

/// |basis_D(n,a)| against the closed form and the per-profile counts, all
/// n <= max_n.
Report check_dim_formulas(int max_n = 8);

/// (n-1)! * sum_a C(n+a-1,a) C(n-2,a-1) = n! * s(n) for n = 2..max_n.
Report check_schroeder_identity(int max_n = 10);

/// Differentials square to zero: the word differential on every basis
/// element up to word_n, the tree differential on the generators up to
/// gen_n and on every monomial up to mono_n.
Report check_square_zero(int word_n = 6, int gen_n = 6, int mono_n = 5);

/// The worked computations printed in the sources of truth: the two
/// Q-model products, the expansion of the word differential on d_2, and
/// the displayed image of the tree differential on T_3.
Report check_worked_examples();

/// Corolla-multiset counting against brute-force enumeration for every
/// multiset realizable with at most max_leaves leaves, plus the
/// Fuss-Catalan specializations.
Report check_counting(int max_leaves = 8);

/// The deformation operad is generated by its degree-one part (rank of
/// iterated compositions reaches dim D(n), n <= max_n).
Report check_generated_by_degree_one(int max_n = 5);

/// Q relations, closure of sPerm under composition, and the odd
/// associativity/permutation identities up to max_n.
Report check_sperm_closure(int max_n = 5);

/// The normal higher derived brackets are a basis of (Lie x D^1)(n):
/// n! independent vectors in an n!-dimensional space, n <= max_n.
Report check_normal_bracket_basis(int max_n = 6);

/// suspend(Perm) has the structure constants of the Q-model sPerm up to a
/// diagonal change of basis (solved from arity 2 and verified through
/// arity max_n).
Report check_suspension_vs_q_model(int max_n = 4);

/// Homology of D at one arity against the resolution profile
/// (0, ..., 0, n).
Report check_homology(int n, int max_arity = 5);

// --- seeded property suites -------------------------------------------

/// Sequential/parallel associativity and unit laws across all operads
/// built here, exhaustive at tiny arity plus `cases` random instances.
Report check_operad_axioms(uint64_t seed, int cases = 500);

/// Equivariance of composition in the Lie, word, tree and Hadamard
/// operads.
Report check_equivariance(uint64_t seed, int cases = 500);

/// The differentials are derivations for partial composition.
Report check_dg_leibniz(uint64_t seed, int cases = 500);

/// eliminate() output re-expands to its input; every weight-zero monomial
/// decomposes with a factor {delta_j, l_1..l_f}, f >= j+1.
Report check_eliminate_roundtrip(uint64_t seed, int cases = 500);

/// The identity satisfied by the cofree Zinbiel coproduct:
/// (id x Delta) Delta = (Delta x id) Delta + (tau x id)(Delta x id) Delta.
Report check_zinbiel_coidentity(uint64_t seed, int cases = 500);

// --- suite runners ------------------------------------------------------

std::vector<Report> run_theorem_suite(int max_n, bool long_run);
std::vector<Report> run_homology_suite(int max_n, bool long_run);
std::vector<Report> run_axiom_suite(uint64_t seed, int cases = 500);
std::vector<Report> run_counting_suite(int max_leaves);

}  // namespace operad_forge
