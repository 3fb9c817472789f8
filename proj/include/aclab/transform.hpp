#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace aclab {

using StateId = std::uint32_t;

/// Total self-map of {0..n-1}, stored as its image sequence.
class Transformation {
public:
    Transformation() = default;
    explicit Transformation(std::vector<StateId> images);

    static Transformation identity(StateId n);

    StateId degree() const { return static_cast<StateId>(images_.size()); }
    StateId operator[](StateId q) const { return images_[q]; }
    const std::vector<StateId>& images() const { return images_; }

    /// Number of distinct images.
    StateId rank() const;
    bool is_permutation() const { return rank() == degree(); }
    bool is_identity() const;
    Transformation inverse() const; // permutations only

    /// Multiset of cycle lengths of a permutation (sorted).
    std::vector<StateId> cycle_type() const;

    friend bool operator==(const Transformation&, const Transformation&) = default;
    friend auto operator<=>(const Transformation& a, const Transformation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<StateId> images_;
};

/// q(st) = (qs)t: apply s first, then t.
Transformation compose(const Transformation& s, const Transformation& t);

/// Conjugate r s r^{-1} under the same left-action convention.
Transformation conjugate(const Transformation& r, const Transformation& s);

struct TransformationHash {
    std::size_t operator()(const Transformation& t) const;
};

/// One piece of the symbolic transformation notation: a cycle
/// (q_0,...,q_{k-1}), a collapse (P -> q), a range shift
/// (_i^j q -> q+1 / q-1, optionally mod n), or the identity.
struct TransformPart {
    enum class Kind { Cycle, Collapse, Shift };
    Kind kind = Kind::Cycle;
    std::vector<StateId> cycle;
    std::vector<StateId> collapse_from;
    StateId collapse_to = 0;
    std::int64_t shift_lo = 0, shift_hi = -1; // empty when lo > hi
    int shift_delta = 1;
    bool shift_mod = false;
};

/// Symbolic description of a transformation as a product of parts
/// acting on pairwise disjoint state sets.
struct TransformSpec {
    std::vector<TransformPart> parts;

    static TransformSpec identity() { return {}; }
    TransformSpec& cycle(std::initializer_list<StateId> states);
    TransformSpec& cycle(std::vector<StateId> states);
    TransformSpec& collapse(std::vector<StateId> from, StateId to);
    TransformSpec& send(StateId from, StateId to) { return collapse({from}, to); }
    TransformSpec& shift_up(std::int64_t lo, std::int64_t hi, bool mod = false);
    TransformSpec& shift_down(std::int64_t lo, std::int64_t hi, bool mod = false);
};

/// Compiles the notation into a Transformation of degree n.
/// Throws std::invalid_argument on out-of-range states, a repeated state
/// within one cycle, or overlapping parts.
Transformation compile(const TransformSpec& spec, StateId n);

} // namespace aclab
