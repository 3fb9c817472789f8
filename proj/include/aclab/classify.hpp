#pragma once

#include <optional>
#include <string>

#include "aclab/automaton.hpp"

namespace aclab {

/// Ideal and convexity deciders. All are language-level: inputs are
/// minimized internally, so any complete DFA is accepted.
bool is_right_ideal(const Dfa& d);        // L = L Sigma*
bool is_left_ideal(const Dfa& d);         // L = Sigma* L
bool is_two_sided_ideal(const Dfa& d);    // L = Sigma* L Sigma*
bool is_all_sided_ideal(const Dfa& d);    // L = L shuffle Sigma*

bool is_prefix_free(const Dfa& d);
bool is_suffix_free(const Dfa& d);
bool is_factor_free(const Dfa& d);
bool is_subword_free(const Dfa& d);

bool is_prefix_closed(const Dfa& d);      // complement is a right ideal
bool is_suffix_closed(const Dfa& d);
bool is_factor_closed(const Dfa& d);
bool is_subword_closed(const Dfa& d);

bool is_prefix_convex(const Dfa& d);
bool is_suffix_convex(const Dfa& d);
bool is_factor_convex(const Dfa& d);
bool is_subword_convex(const Dfa& d);

/// Convex but neither free, closed, nor the corresponding ideal.
bool is_proper_prefix_convex(const Dfa& d);
bool is_proper_suffix_convex(const Dfa& d);
bool is_proper_factor_convex(const Dfa& d);
bool is_proper_subword_convex(const Dfa& d);

bool is_non_returning(const Dfa& d);      // minimal DFA has no transition into its initial state
bool is_bideterministic(const Dfa& d);
bool is_star_free(const Dfa& d,
                  std::uint64_t semigroup_limit = limits::semigroup_limit());

/// DFAs of the languages used by the convexity checks; exposed for tests.
Dfa prefixes_dfa(const Dfa& d);   // all prefixes of words of L
Dfa suffixes_dfa(const Dfa& d);
Dfa factors_dfa(const Dfa& d);
Dfa subwords_dfa(const Dfa& d);
Dfa shuffle_closure_dfa(const Dfa& d); // L shuffle Sigma*

struct ClassReport {
    bool right_ideal = false, left_ideal = false, two_sided_ideal = false,
         all_sided_ideal = false;
    bool prefix_free = false, suffix_free = false, factor_free = false, subword_free = false;
    bool prefix_closed = false, suffix_closed = false, factor_closed = false,
         subword_closed = false;
    bool prefix_convex = false, suffix_convex = false, factor_convex = false,
         subword_convex = false;
    bool proper_prefix_convex = false, proper_suffix_convex = false,
         proper_factor_convex = false, proper_subword_convex = false;
    bool non_returning = false, bideterministic = false, star_free = false;
};

ClassReport classify(const Dfa& d);
std::string class_report_json(const ClassReport& r);

struct ConvexityCounterexample {
    std::string u, v, w; // u between-below v between-below w; u,w in L, v not
};

/// Counterexample triple for a failed convexity/freeness flag, letters
/// joined by the empty string (single-letter names) or spaces otherwise.
std::optional<ConvexityCounterexample> explain_not_prefix_convex(const Dfa& d);
std::optional<ConvexityCounterexample> explain_not_prefix_free(const Dfa& d);

} // namespace aclab
