#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aclab/limits.hpp"
#include "aclab/transform.hpp"

namespace aclab {

/// Ordered list of distinct letter names. Order is significant: dialect
/// maps and canonical state numbering are positional.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> letters);

    std::uint32_t size() const { return static_cast<std::uint32_t>(letters_.size()); }
    const std::string& name(std::uint32_t i) const { return letters_[i]; }
    const std::vector<std::string>& letters() const { return letters_; }
    std::optional<std::uint32_t> index(const std::string& name) const;
    bool has(const std::string& name) const { return index(name).has_value(); }
    bool same_set(const Alphabet& other) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> letters_;
};

using Word = std::vector<std::uint32_t>; // letter indices

/// Complete DFA: one Transformation per letter, explicit initial state and
/// final-state set.
struct Dfa {
    Alphabet alphabet;
    StateId num_states = 0;
    std::vector<Transformation> delta; // delta[letter][q]
    StateId initial = 0;
    std::vector<bool> accepting;

    StateId step(StateId q, std::uint32_t letter) const { return delta[letter][q]; }
    StateId run(StateId q, std::span<const std::uint32_t> word) const;
    bool accepts(std::span<const std::uint32_t> word) const;
    std::vector<StateId> final_states() const;

    /// Throws std::invalid_argument unless complete and well-formed.
    void validate() const;
};

struct NfaTransition {
    StateId from = 0;
    std::int32_t letter = 0; // -1 encodes an empty-word move
    StateId to = 0;
    friend bool operator==(const NfaTransition&, const NfaTransition&) = default;
    friend auto operator<=>(const NfaTransition&, const NfaTransition&) = default;
};

constexpr std::int32_t kEpsilon = -1;

/// NFA with a set of initial states and optional empty-word moves.
struct Nfa {
    Alphabet alphabet;
    StateId num_states = 0;
    std::vector<NfaTransition> transitions;
    std::vector<StateId> initials;
    std::vector<StateId> finals;

    bool accepts(std::span<const std::uint32_t> word) const;
    void validate() const;
};

/// Subset construction with empty-word closure; the empty subset, if
/// reachable, is kept as a sink. States come out in breadth-first order
/// from the initial subset, letters in alphabet order.
/// Requires num_states <= 64; guarded by the subset budget.
Dfa determinize(const Nfa& nfa, std::uint64_t subset_limit = limits::subset_limit());

/// Interchanges initial and final state sets and reverses all transitions.
Nfa reverse_nfa(const Dfa& dfa);

Nfa to_nfa(const Dfa& dfa);

/// Removes unreachable states (keeps the automaton complete).
Dfa trim_unreachable(const Dfa& dfa);

/// Renumbers states breadth-first from the initial state in alphabet
/// order. All states must be reachable.
Dfa canonicalize(const Dfa& dfa);

/// Minimal complete DFA of the same language, canonically numbered.
/// The empty quotient is retained as a state when present.
Dfa minimize(const Dfa& dfa);

bool is_minimal(const Dfa& dfa);

/// kappa(L): state count of the minimal complete DFA.
StateId quotient_complexity(const Dfa& dfa);

/// Per-state quotient complexity of the right language of each state.
/// Throws std::invalid_argument if dfa is not minimal.
std::vector<StateId> quotient_complexities(const Dfa& dfa);

/// True iff a bijection of states preserves initial, finals and all
/// transitions, letters matched by name. Inputs minimal and complete.
/// Throws std::invalid_argument if the alphabets differ as sets.
bool isomorphic(const Dfa& a, const Dfa& b);

/// True iff the two DFAs accept the same language (product construction,
/// letters matched by name). Throws on alphabet mismatch.
bool language_equal(const Dfa& a, const Dfa& b);

/// Reorders the transition table to match the given alphabet (same set of
/// names, possibly different order).
Dfa remap_alphabet(const Dfa& dfa, const Alphabet& target);

/// Single-state DFA of the empty language or of Sigma* over `alphabet`.
Dfa empty_language_dfa(const Alphabet& alphabet);
Dfa sigma_star_dfa(const Alphabet& alphabet);

/// State of `dfa` whose right language is empty, if any.
std::optional<StateId> find_empty_state(const Dfa& dfa);

/// States from which some final state is reachable.
std::vector<bool> coreachable_states(const Dfa& dfa);

/// Shortest word (in BFS/alphabet order) accepted by the DFA, if the
/// language is non-empty.
std::optional<Word> shortest_accepted(const Dfa& dfa);

} // namespace aclab
