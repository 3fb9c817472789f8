#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "aclab/automaton.hpp"

namespace aclab {

enum class OpMode { Restricted, Unrestricted };

/// Binary boolean function as a truth table over (in first, in second).
struct BoolOp {
    // bit layout: value(x, y) = (mask >> (2*x + y)) & 1
    std::uint8_t mask = 0;

    bool value(bool x, bool y) const { return (mask >> ((x ? 2 : 0) + (y ? 1 : 0))) & 1; }
    bool depends_on_first() const;
    bool depends_on_second() const;
    /// Proper: depends on both arguments.
    bool proper() const { return depends_on_first() && depends_on_second(); }

    static BoolOp from_mask_string(const std::string& bits); // "0110" = (0,0),(0,1),(1,0),(1,1)
    static std::optional<BoolOp> from_name(const std::string& name);
    std::string mask_string() const;
    std::string name() const; // named op or mask string

    static BoolOp union_op() { return {0b1110}; }
    static BoolOp intersection() { return {0b1000}; }
    static BoolOp difference() { return {0b0100}; }        // first minus second
    static BoolOp symmetric_difference() { return {0b0110}; }

    friend bool operator==(const BoolOp&, const BoolOp&) = default;
};

/// All ten proper binary boolean operations.
std::vector<BoolOp> proper_boolean_ops();

/// Minimal DFA of L^R via reversal and the subset construction.
Dfa reverse(const Dfa& dfa, std::uint64_t subset_limit = limits::subset_limit());

/// Minimal DFA of L*.
Dfa star(const Dfa& dfa, std::uint64_t subset_limit = limits::subset_limit());

/// Minimal DFA of L1 L2. Unrestricted mode first completes both operands
/// over the union alphabet, adding an empty state where needed.
Dfa product(const Dfa& d1, const Dfa& d2, OpMode mode,
            std::uint64_t subset_limit = limits::subset_limit());

/// Minimal DFA of L1 o L2. In unrestricted mode the result alphabet
/// follows the operation: letters private to one operand are dropped
/// when no accepted word can contain them.
Dfa boolean(const Dfa& d1, const Dfa& d2, BoolOp op, OpMode mode);

/// Complement over the same alphabet (finals inverted).
Dfa complement(const Dfa& dfa);

/// Both operands completed over the union alphabet; an empty state is
/// added only when an operand lacks one and needs new letters.
std::pair<Dfa, Dfa> unify_alphabets(const Dfa& d1, const Dfa& d2);

} // namespace aclab
