#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aclab/automaton.hpp"

namespace aclab {

/// Atoms are keyed by the subset S of the minimal DFA's states whose
/// quotients appear uncomplemented in the atomic intersection A_S.
using AtomId = std::uint64_t; // bit mask over Q_n

/// All S with A_S non-empty, sorted ascending. Input must be minimal;
/// enumeration is capped at n <= 16.
std::vector<AtomId> atom_ids(const Dfa& dfa);

/// True iff the atomic intersection A_S is non-empty.
bool is_atom(const Dfa& dfa, AtomId S);

/// (number of atoms, kappa(L^R)); the two are equal for every regular
/// language.
std::pair<std::uint64_t, StateId> atom_count_equals_reverse(const Dfa& dfa);

/// Quotient complexity of the atom A_S via the pair-of-disjoint-sets DFA:
/// states (X, Y) starting at (S, S-complement), (X,Y)a = (Xa, Ya) while
/// disjoint, empty sink on collision; accepting iff X inside F and Y
/// disjoint from F. Throws std::invalid_argument if S is not an atom.
StateId atom_complexity(const Dfa& dfa, AtomId S,
                        std::uint64_t pair_budget = limits::atom_pair_budget());

/// The DFA of A_S itself (minimized), for language-level checks.
Dfa atom_dfa(const Dfa& dfa, AtomId S, std::uint64_t pair_budget = limits::atom_pair_budget());

/// NFA over atoms: the right language of state A_S is the atom A_S.
/// Initial atoms contain the initial quotient uncomplemented; the unique
/// final atom is the one containing the empty word (S = F).
struct Atomaton {
    Nfa nfa;                      // states indexed as in `atoms`
    std::vector<AtomId> atoms;    // sorted ascending
};

Atomaton atomaton(const Dfa& dfa);

/// FTS / STS / MAL / MNA / MCR computational predicates.
struct AtomicityFlags {
    bool fts = false; // full transformation semigroup, n^n elements
    bool sts = false; // set-transitive permutation subgroup + rank n-1 element
    bool mal = false; // all 2^n atoms, each meeting its upper bound
    bool mna = false; // maximal number of atoms, 2^n
    bool mcr = false; // kappa(L^R) = 2^n
};

AtomicityFlags atomicity_classes(const Dfa& dfa,
                                 std::uint64_t semigroup_limit = limits::semigroup_limit());

struct AtomReport {
    std::vector<std::pair<AtomId, StateId>> atoms; // (S, complexity)
    std::uint64_t count = 0;
    StateId reverse_complexity = 0;
};

AtomReport atom_report(const Dfa& dfa);
std::string atom_report_json(const AtomReport& r, StateId n);

} // namespace aclab
