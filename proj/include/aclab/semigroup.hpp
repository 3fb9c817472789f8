#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aclab/automaton.hpp"
#include "aclab/transform.hpp"

namespace aclab {

/// Closure of the letter transformations under composition; the identity
/// belongs only if some non-empty word induces it.
struct TransitionSemigroup {
    std::vector<Transformation> elements;     // breadth-first order
    std::vector<std::string> witness_words;   // parallel to elements; empty unless requested
    std::vector<std::string> generator_names; // letters, deduplicated by action
    bool has_identity = false;
};

TransitionSemigroup transition_semigroup(const Dfa& dfa,
                                         std::uint64_t limit = limits::semigroup_limit(),
                                         bool with_words = false);

/// |T| of the minimal DFA; isomorphic to the syntactic semigroup.
std::uint64_t syntactic_complexity(const Dfa& dfa,
                                   std::uint64_t limit = limits::semigroup_limit());

/// Group of all rank-n elements (empty when there are none).
struct PermutationGroup {
    StateId degree = 0;
    std::vector<Transformation> elements;
};

PermutationGroup permutation_subgroup(const TransitionSemigroup& sg, StateId n);

/// True iff the action on k-subsets has a single orbit for each k in 1..n-1.
bool is_set_transitive(const PermutationGroup& g, StateId n);

/// True iff every element t satisfies t^{k+1} = t^k for some k.
bool is_aperiodic(const TransitionSemigroup& sg);

/// True iff some permutation r satisfies r s r^{-1} = s2 and r t r^{-1} = t2.
/// Exhaustive search over S_n with cycle-type pruning; degree capped at 8.
bool conjugate_bases(const Transformation& s, const Transformation& t,
                     const Transformation& s2, const Transformation& t2);

/// Pairs of the direct product reachable from (initial, initial) by words
/// inducing a permutation in both automata simultaneously.
std::vector<std::pair<StateId, StateId>>
perm_reachable_states(const Dfa& d1, const Dfa& d2,
                      std::uint64_t limit = limits::semigroup_limit());

struct SemigroupReport {
    std::uint64_t size = 0;
    bool has_identity = false;
    std::uint64_t perm_subgroup_size = 0;
    bool aperiodic = false;
};

SemigroupReport semigroup_report(const Dfa& dfa,
                                 std::uint64_t limit = limits::semigroup_limit());
std::string semigroup_report_json(const SemigroupReport& r);

} // namespace aclab
