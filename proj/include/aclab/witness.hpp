#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aclab/automaton.hpp"

namespace aclab {

enum class WitnessClass {
    Regular4,             // a: (0..n-1), b: (0,1), c: (n-1 -> 0), d: identity
    Regular3,             // a: (0..n-1), b: (0,1), c: (1 -> 0)
    RightIdeal,
    PrefixClosed,
    PrefixFree,           // alphabet a,b,c,d,e_0..e_{n-3}
    ProperPrefixConvex,   // takes k
    LeftIdeal,
    SuffixClosed,
    SuffixFreeSemigroup,  // 5-letter witness (semigroup/reversal/atoms/booleans)
    SuffixFreeOps,        // 3-letter witness (star/product)
    BifixFreeOps,
    TwoSidedIdeal,
    NonReturning,
};

std::optional<WitnessClass> witness_class_from_name(const std::string& name);
std::string witness_class_name(WitnessClass c);
std::vector<WitnessClass> all_witness_classes();

/// Smallest n the definition admits.
StateId witness_min_n(WitnessClass c);
bool witness_takes_k(WitnessClass c);

/// The witness DFA exactly as defined, over its canonical alphabet.
/// k is required (1 <= k <= n-2) iff the class is ProperPrefixConvex.
Dfa make_witness(WitnessClass c, StateId n, std::optional<StateId> k = std::nullopt);

/// Positional partial map over a canonical alphabet: each position maps to
/// a new letter name or is deleted. Trailing deletions may be omitted.
struct Dialect {
    std::vector<std::optional<std::string>> targets;

    static Dialect identity_for(const Alphabet& alphabet);
    /// Comma-separated positional targets, "-" for deletion: "b,a,-,c".
    static Dialect parse(const std::string& text);
    std::string to_string() const;
    bool is_identity_for(const Alphabet& alphabet) const;
};

/// Letters renamed positionally; deleted letters removed together with
/// their transitions. The result is not re-minimized.
Dfa apply_dialect(const Dfa& dfa, const Dialect& dialect);

} // namespace aclab
