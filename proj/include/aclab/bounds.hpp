#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "aclab/ops.hpp"
#include "aclab/transform.hpp"

namespace aclab::bounds {

using Big = mpz_class;

/// C(n, k) by the Pascal recurrence; 0 when k < 0 or k > n.
Big binomial(long n, long k);
Big power(long base, unsigned long exp);
Big factorial(long n);
/// floor(e (n-1)!) computed exactly as sum_{i=0}^{n-1} (n-1)!/i!.
Big floor_e_factorial(long n);

enum class BoundClass {
    Regular,
    RightIdeal,
    PrefixClosed,
    PrefixFree,
    ProperPrefixConvex,
    LeftIdeal,
    SuffixClosed,
    SuffixFree,
    BifixFree,
    BifixFreeMaxStream,
    TwoSidedIdeal,
    NonReturning,
    StarFree,
    JTrivial,
    RTrivial,
    FiniteCofinite,
    ReverseDefinite,
    FactorFree, // conjecture only
};

enum class BoundMeasure {
    Semigroup,
    Reversal,
    AtomCount,
    Star,
    ProductRestricted,
    ProductUnrestricted,
    BooleanRestricted,
    BooleanUnrestricted,
    AlphabetSize, // bifix-free most complex stream
};

struct BoundQuery {
    BoundClass cls = BoundClass::Regular;
    BoundMeasure measure = BoundMeasure::Semigroup;
    long n = 0;
    long m = 0;              // binary measures
    long k = -1;             // proper prefix-convex, second operand
    long j = -1;             // proper prefix-convex, first operand
    BoolOp op;               // boolean measures
    bool allow_conjecture = false;
};

/// Exact value of the cited closed form. Throws std::invalid_argument for
/// out-of-domain parameters or unknown (class, measure) pairs, including
/// the star-free semigroup (no tight bound known) and the factor-free
/// conjecture unless allow_conjecture is set.
Big bound(const BoundQuery& q);

/// Per-atom upper bound for the class's witness; S is a bit mask over Q_n.
/// k applies to the proper prefix-convex class only.
Big atom_bound(BoundClass cls, long n, long k, std::uint64_t S);

/// The general regular-language atom bound as a machine integer (n <= 16).
std::uint64_t regular_atom_bound(StateId n, std::uint64_t S);

/// Expected multiset of per-state quotient complexities, sorted ascending.
std::vector<long> expected_quotient_profile(BoundClass cls, long n, long k = -1);

std::optional<BoundClass> class_from_name(const std::string& name);
std::string class_name(BoundClass cls);
std::optional<BoundMeasure> measure_from_name(const std::string& name);
std::string measure_name(BoundMeasure m);

/// Measures that have a stated bound for the class.
std::vector<BoundMeasure> measures_for(BoundClass cls);

} // namespace aclab::bounds
