#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aclab {

/// Thrown when an enumeration or subset construction exceeds its budget.
/// Carries the partial count reached so callers can report it.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, std::uint64_t partial)
        : std::runtime_error(what), partial_count(partial) {}
    std::uint64_t partial_count;
};

namespace limits {

// Defaults; ACLAB_SEMIGROUP_LIMIT and ACLAB_SUBSET_LIMIT override.
std::uint64_t semigroup_limit();
std::uint64_t subset_limit();
std::uint64_t atom_pair_budget();

constexpr std::uint32_t kMaxSubsetStates = 64;   // states encodable in one mask
constexpr std::uint32_t kMaxAtomStates = 16;     // 2^n atom enumeration cap
constexpr std::uint32_t kMaxConjugacyDegree = 8; // exhaustive S_n search cap

} // namespace limits
} // namespace aclab
