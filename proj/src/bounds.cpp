#include "aclab/bounds.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace aclab::bounds {

Big binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    static std::vector<std::vector<Big>> rows{{1}};
    while (static_cast<long>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<Big> row(prev.size() + 1, 1);
        for (std::size_t i = 1; i < prev.size(); ++i) row[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

Big power(long base, unsigned long exp) {
    Big out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return out;
}

Big factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Big out = 1;
    for (long i = 2; i <= n; ++i) out *= i;
    return out;
}

Big floor_e_factorial(long n) {
    if (n < 1) throw std::invalid_argument("floor_e_factorial: n >= 1 required");
    Big fact = factorial(n - 1);
    Big sum = 0, term = fact;
    for (long i = 0; i <= n - 1; ++i) {
        sum += term;       // term = (n-1)!/i!
        if (i < n - 1) term /= (i + 1);
    }
    return sum;
}

namespace {

[[noreturn]] void domain_error(const std::string& what) { throw std::invalid_argument(what); }

void require(bool cond, const std::string& what) {
    if (!cond) domain_error(what);
}

long popcount(std::uint64_t v) { return std::popcount(v); }

enum class CanonOp { Union, Intersection, Difference, SymmetricDifference };

CanonOp canon_op(const BoolOp& op) {
    if (op == BoolOp::union_op()) return CanonOp::Union;
    if (op == BoolOp::intersection()) return CanonOp::Intersection;
    if (op == BoolOp::difference()) return CanonOp::Difference;
    if (op == BoolOp::symmetric_difference()) return CanonOp::SymmetricDifference;
    domain_error("bound: boolean bounds are stated for union, intersection, "
                 "difference and symmetric difference");
}

Big regular_boolean(long m, long n, CanonOp op, bool unrestricted) {
    if (!unrestricted) return Big(m) * n;
    switch (op) {
    case CanonOp::Union:
    case CanonOp::SymmetricDifference:
        return Big(m + 1) * (n + 1);
    case CanonOp::Difference:
        return Big(m) * n + m;
    case CanonOp::Intersection:
        return Big(m) * n;
    }
    domain_error("unreachable");
}

} // namespace

Big bound(const BoundQuery& q) {
    const long n = q.n, m = q.m, k = q.k, j = q.j;
    auto mn = [&] { return Big(m) * n; };

    switch (q.cls) {
    case BoundClass::Regular:
        require(n >= 3 && (q.measure < BoundMeasure::ProductRestricted || m >= 3),
                "regular bounds need n, m >= 3");
        switch (q.measure) {
        case BoundMeasure::Semigroup: return power(n, n);
        case BoundMeasure::Reversal:
        case BoundMeasure::AtomCount: return power(2, n);
        case BoundMeasure::Star: return power(2, n - 1) + power(2, n - 2);
        case BoundMeasure::ProductRestricted: return Big(m) * power(2, n) - power(2, n - 1);
        case BoundMeasure::ProductUnrestricted: return Big(m) * power(2, n) + power(2, n - 1);
        case BoundMeasure::BooleanRestricted:
            require(q.op.proper(), "restricted boolean bound mn holds for proper operations");
            return mn();
        case BoundMeasure::BooleanUnrestricted:
            return regular_boolean(m, n, canon_op(q.op), true);
        default: break;
        }
        break;

    case BoundClass::RightIdeal:
        require(n >= 4 && (q.measure < BoundMeasure::ProductRestricted || m >= 4),
                "right-ideal bounds need n, m >= 4");
        switch (q.measure) {
        case BoundMeasure::Semigroup: return power(n, n - 1);
        case BoundMeasure::Reversal:
        case BoundMeasure::AtomCount: return power(2, n - 1);
        case BoundMeasure::Star: return Big(n) + 1;
        case BoundMeasure::ProductRestricted: return Big(m) + power(2, n - 2);
        case BoundMeasure::ProductUnrestricted:
            return Big(m) + power(2, n - 1) + power(2, n - 2) + 1;
        case BoundMeasure::BooleanRestricted:
            switch (canon_op(q.op)) {
            case CanonOp::Intersection:
            case CanonOp::SymmetricDifference: return mn();
            case CanonOp::Difference: return mn() - (m - 1);
            case CanonOp::Union: return mn() - (m + n - 2);
            }
            break;
        case BoundMeasure::BooleanUnrestricted: // same as regular languages
            return regular_boolean(m, n, canon_op(q.op), true);
        default: break;
        }
        break;

    case BoundClass::PrefixClosed:
        require(n >= 4 && (q.measure < BoundMeasure::ProductRestricted || m >= 4),
                "prefix-closed bounds need n, m >= 4");
        switch (q.measure) {
        case BoundMeasure::Semigroup: return power(n, n - 1);
        case BoundMeasure::Reversal:
        case BoundMeasure::AtomCount: return power(2, n - 1);
        case BoundMeasure::Star: return power(2, n - 2) + 1;
        case BoundMeasure::ProductRestricted:
        case BoundMeasure::ProductUnrestricted: // empty quotient: modes coincide
            return Big(m + 1) * power(2, n - 2);
        case BoundMeasure::BooleanRestricted:
        case BoundMeasure::BooleanUnrestricted:
            switch (canon_op(q.op)) {
            case CanonOp::Union:
            case CanonOp::SymmetricDifference: return mn();
            case CanonOp::Difference: return mn() - (n - 1);
            case CanonOp::Intersection: return mn() - (m + n - 2);
            }
            break;
        default: break;
        }
        break;

    case BoundClass::PrefixFree:
        require(n >= 4 && (q.measure < BoundMeasure::ProductRestricted || m >= 4),
                "prefix-free bounds need n, m >= 4");
        switch (q.measure) {
        case BoundMeasure::Semigroup: return power(n, n - 2);
        case BoundMeasure::Reversal:
        case BoundMeasure::AtomCount: return power(2, n - 2) + 1;
        case BoundMeasure::Star: return n;
        case BoundMeasure::ProductRestricted:
        case BoundMeasure::ProductUnrestricted: return Big(m) + n - 2;
        case BoundMeasure::BooleanRestricted:
        case BoundMeasure::BooleanUnrestricted:
            switch (canon_op(q.op)) {
            case CanonOp::Union:
            case CanonOp::SymmetricDifference: return mn() - 2;
            case CanonOp::Difference: return mn() - (m + 2 * n - 4);
            case CanonOp::Intersection: return mn() - 2 * (m + n - 3);
            }
            break;
        default: break;
        }
        break;

    case BoundClass::ProperPrefixConvex:
        require(n >= 3 && k >= 1 && k <= n - 2, "proper prefix-convex needs 1 <= k <= n-2");
        switch (q.measure) {
        case BoundMeasure::Semigroup: return power(n, n - 1 - k) * power(k + 1, k);
        case BoundMeasure::Reversal:
        case BoundMeasure::AtomCount: return power(2, n - 1);
        case BoundMeasure::Star: return power(2, n - 2) + power(2, n - 2 - k) + 1;
        case BoundMeasure::ProductRestricted:
        case BoundMeasure::ProductUnrestricted:
            require(m >= 3 && j >= 1 && j <= m - 2, "product needs 1 <= j <= m-2");
            return Big(m - 1 - j) + Big(j) * power(2, n - 2) + power(2, n - 1);
        case BoundMeasure::BooleanRestricted:
        case BoundMeasure::BooleanUnrestricted:
            require(m >= 3 && j >= 1 && j <= m - 2, "boolean needs 1 <= j <= m-2");
            switch (canon_op(q.op)) {
            case CanonOp::Union:
            case CanonOp::SymmetricDifference: return mn();
            case CanonOp::Difference: return mn() - (n - 1);
            case CanonOp::Intersection: return mn() - (m + n - 2);
            }
            break;
        default: break;
        }
        break;

    case BoundClass::LeftIdeal:
        require(n >= 4 && (q.measure < BoundMeasure::ProductRestricted || m >= 4),
                "left-ideal bounds need n, m >= 4");
        switch (q.measure) {
        case BoundMeasure::Semigroup: return power(n, n - 1) + n - 1;
        case BoundMeasure::Reversal:
        case BoundMeasure::AtomCount: return power(2, n - 1) + 1;
        case BoundMeasure::Star: return Big(n) + 1;
        case BoundMeasure::ProductRestricted: return Big(m) + n + 1;
        case BoundMeasure::ProductUnrestricted: return mn() + m + n;
        case BoundMeasure::BooleanRestricted:
            require(q.op.proper(), "restricted boolean bound mn holds for proper operations");
            return mn();
        case BoundMeasure::BooleanUnrestricted:
            return regular_boolean(m, n, canon_op(q.op), true);
        default: break;
        }
        break;

    case BoundClass::SuffixClosed:
        require(n >= 4 && (q.measure < BoundMeasure::ProductRestricted || m >= 4),
                "suffix-closed bounds need n, m >= 4");
        switch (q.measure) {
        case BoundMeasure::Semigroup: return power(n, n - 1) + n - 1;
        case BoundMeasure::Reversal:
        case BoundMeasure::AtomCount: return power(2, n - 1) + 1;
        case BoundMeasure::Star: return n;
        case BoundMeasure::ProductRestricted: return mn() - n + 1;
        case BoundMeasure::ProductUnrestricted: return mn() + m + 1;
        case BoundMeasure::BooleanRestricted:
            require(q.op.proper(), "restricted boolean bound mn holds for proper operations");
            return mn();
        case BoundMeasure::BooleanUnrestricted:
            return regular_boolean(m, n, canon_op(q.op), true);
        default: break;
        }
        break;

    case BoundClass::SuffixFree:
        switch (q.measure) {
        case BoundMeasure::Semigroup:
            require(n >= 6, "suffix-free semigroup bound holds for n >= 6");
            return power(n - 1, n - 2) + n - 2;
        case BoundMeasure::Reversal:
        case BoundMeasure::AtomCount:
            require(n >= 4, "suffix-free bounds need n >= 4");
            return power(2, n - 2) + 1;
        case BoundMeasure::Star:
            require(n >= 4, "suffix-free bounds need n >= 4");
            return power(2, n - 2) + 1;
        case BoundMeasure::ProductRestricted:
        case BoundMeasure::ProductUnrestricted:
            require(n >= 4 && m >= 4, "suffix-free bounds need n, m >= 4");
            return Big(m - 1) * power(2, n - 2) + 1;
        case BoundMeasure::BooleanRestricted:
        case BoundMeasure::BooleanUnrestricted:
            require(n >= 4 && m >= 4, "suffix-free bounds need n, m >= 4");
            switch (canon_op(q.op)) {
            case CanonOp::Union:
            case CanonOp::SymmetricDifference: return mn() - (m + n - 2);
            case CanonOp::Difference: return mn() - (m + 2 * n - 4);
            case CanonOp::Intersection: return mn() - 2 * (m + n - 3);
            }
            break;
        default: break;
        }
        break;

    case BoundClass::BifixFree:
        require(n >= 9 && (q.measure < BoundMeasure::ProductRestricted || m >= 9),
                "bifix-free stream bounds hold for n, m >= 9");
        switch (q.measure) {
        case BoundMeasure::Reversal:
        case BoundMeasure::AtomCount: return power(2, n - 3) + 2;
        case BoundMeasure::Star: return Big(n) - 1;
        case BoundMeasure::ProductRestricted:
        case BoundMeasure::ProductUnrestricted: return Big(m) + n - 2;
        case BoundMeasure::BooleanRestricted:
        case BoundMeasure::BooleanUnrestricted:
            switch (canon_op(q.op)) {
            case CanonOp::Union:
            case CanonOp::SymmetricDifference: return mn() - (m + n);
            case CanonOp::Difference: return mn() - (2 * m + 3 * n - 9);
            case CanonOp::Intersection: return mn() - 3 * (m + n - 4);
            }
            break;
        default: break;
        }
        break;

    case BoundClass::BifixFreeMaxStream:
        require(n >= 4, "bifix-free most-complex-stream formulas need n >= 4");
        switch (q.measure) {
        case BoundMeasure::Semigroup:
            return power(n - 1, n - 3) + power(n - 2, n - 3) + Big(n - 3) * power(2, n - 3);
        case BoundMeasure::AlphabetSize:
            return power(n - 2, n - 3) + Big(n - 3) * power(2, n - 3) - 1;
        default: break;
        }
        break;

    case BoundClass::TwoSidedIdeal:
        require(n >= 5 && (q.measure < BoundMeasure::ProductRestricted || m >= 5),
                "two-sided-ideal bounds need n, m >= 5");
        switch (q.measure) {
        case BoundMeasure::Semigroup:
            return power(n, n - 2) + Big(n - 2) * power(2, n - 2) + 1;
        case BoundMeasure::Reversal:
        case BoundMeasure::AtomCount: return power(2, n - 1) + 1;
        case BoundMeasure::Star: return Big(n) + 1;
        case BoundMeasure::ProductRestricted: return Big(m) + n - 1;
        case BoundMeasure::ProductUnrestricted: return Big(m) + 2 * n;
        case BoundMeasure::BooleanRestricted:
            switch (canon_op(q.op)) {
            case CanonOp::Intersection:
            case CanonOp::SymmetricDifference: return mn();
            case CanonOp::Difference: return mn() - (m - 1);
            case CanonOp::Union: return mn() - (m + n - 2);
            }
            break;
        case BoundMeasure::BooleanUnrestricted:
            return regular_boolean(m, n, canon_op(q.op), true);
        default: break;
        }
        break;

    case BoundClass::NonReturning:
        require(n >= 4 && (q.measure < BoundMeasure::ProductRestricted || m >= 4),
                "non-returning bounds need n, m >= 4");
        switch (q.measure) {
        case BoundMeasure::Semigroup: return power(n - 1, n);
        case BoundMeasure::Reversal:
        case BoundMeasure::AtomCount: return power(2, n);
        case BoundMeasure::Star: return power(2, n - 1);
        case BoundMeasure::ProductRestricted: return Big(m - 1) * power(2, n - 1) + 1;
        case BoundMeasure::ProductUnrestricted: return Big(m) * power(2, n - 1) + 1;
        case BoundMeasure::BooleanRestricted:
            require(q.op.proper(), "restricted boolean bound holds for proper operations");
            return mn() - (m + n - 2);
        case BoundMeasure::BooleanUnrestricted:
            return regular_boolean(m, n, canon_op(q.op), true);
        default: break;
        }
        break;

    case BoundClass::StarFree:
        switch (q.measure) {
        case BoundMeasure::Semigroup:
            domain_error("star-free syntactic complexity: no tight upper bound is known");
        case BoundMeasure::Reversal:
            require(n >= 1, "star-free reversal needs n >= 1");
            return power(2, n) - 1;
        default: break;
        }
        break;

    case BoundClass::JTrivial:
        if (q.measure == BoundMeasure::Semigroup) {
            require(n >= 1, "n >= 1 required");
            return floor_e_factorial(n);
        }
        break;
    case BoundClass::RTrivial:
        if (q.measure == BoundMeasure::Semigroup) {
            require(n >= 1, "n >= 1 required");
            return factorial(n);
        }
        break;
    case BoundClass::FiniteCofinite:
    case BoundClass::ReverseDefinite:
        if (q.measure == BoundMeasure::Semigroup) {
            require(n >= 1, "n >= 1 required");
            return factorial(n - 1);
        }
        break;

    case BoundClass::FactorFree:
        if (q.measure == BoundMeasure::Semigroup) {
            require(q.allow_conjecture,
                    "factor-free syntactic complexity is open; pass the conjecture flag "
                    "to evaluate the conjectured formula");
            require(n >= 4, "n >= 4 required");
            return power(n - 1, n - 3) + Big(n - 3) * power(2, n - 3) + 1;
        }
        break;
    }
    domain_error("bound: no stated bound for class " + class_name(q.cls) + ", measure " +
                 measure_name(q.measure));
}

Big atom_bound(BoundClass cls, long n, long k, std::uint64_t S) {
    const std::uint64_t full = (n >= 64) ? ~0ull : (1ull << n) - 1;
    require((S & ~full) == 0, "atom_bound: S not a subset of Q_n");
    const long s = popcount(S);

    switch (cls) {
    case BoundClass::Regular: {
        if (S == 0 || S == full) return power(2, n) - 1;
        Big sum = 1;
        for (long x = 1; x <= s; ++x)
            for (long y = 1; y <= n - s; ++y)
                sum += binomial(n, x) * binomial(n - x, y);
        return sum;
    }
    case BoundClass::RightIdeal: {
        require((S >> (n - 1)) & 1, "right-ideal atoms contain the Sigma* quotient");
        if (S == full) return power(2, n - 1);
        Big sum = 1;
        for (long x = 1; x <= s; ++x)
            for (long y = 1; y <= n - s; ++y)
                sum += binomial(n - 1, x - 1) * binomial(n - x, y);
        return sum;
    }
    case BoundClass::PrefixClosed: {
        require(((S >> (n - 1)) & 1) == 0, "prefix-closed atoms exclude the empty quotient");
        if (S == 0) return power(2, n - 1);
        Big sum = 1;
        for (long x = 1; x <= n - s; ++x)
            for (long y = 1; y <= s; ++y)
                sum += binomial(n - 1, x - 1) * binomial(n - x, y);
        return sum;
    }
    case BoundClass::PrefixFree: {
        const std::uint64_t middle = (1ull << (n - 2)) - 1; // Q_{n-2} = {0..n-3}
        if (S == (1ull << (n - 2))) return 2;               // S = {n-2}
        if (S == 0) return power(2, n - 1);
        if (S == middle) return power(2, n - 2) + 1;
        require((S & ~middle) == 0, "prefix-free atoms are subsets of Q_{n-2} or {n-2}");
        Big sum = 2;
        for (long x = 1; x <= s; ++x)
            for (long y = 1; y <= n - 2 - s; ++y)
                sum += binomial(n - 2, x) * binomial(n - 2 - x, y);
        return sum;
    }
    case BoundClass::ProperPrefixConvex: {
        require(k >= 1 && k <= n - 2, "1 <= k <= n-2 required");
        if (S == 0) return power(2, n - 1);
        require(((S >> (n - 1)) & 1) == 0, "atoms exclude the empty state");
        const std::uint64_t e_mask = (1ull << (n - 1 - k)) - 1;
        const long x1 = popcount(S & e_mask);
        const long x2 = popcount(S & ~e_mask);
        const long e = n - 1 - k;
        const long x1bar = e - x1, x2bar = k - x2;
        Big sum = 1;
        if (x2 != 0) {
            for (long a = 0; a <= x1; ++a)
                for (long b = 1; b <= x1 + x2 - a; ++b)
                    for (long c = 0; c <= x1bar; ++c)
                        for (long d = 0; d <= x1bar + x2bar - c; ++d)
                            sum += binomial(e, a) * binomial(k, b) * binomial(e - a, c) *
                                   binomial(k - b, d);
        } else {
            for (long a = 0; a <= x1; ++a)
                for (long b = 0; b <= x1 - a; ++b)
                    for (long c = 0; c <= x1bar; ++c)
                        for (long d = 0; d <= k; ++d)
                            sum += binomial(e, a) * binomial(k, b) * binomial(e - a, c) *
                                   binomial(k - b, d);
            Big corr = 0;
            for (long y = 0; y <= x1bar; ++y) corr += binomial(e, y);
            sum -= power(2, k) * corr;
        }
        return sum;
    }
    case BoundClass::LeftIdeal: {
        if (S == full) return n;
        if (S == 0) return power(2, n - 1);
        Big sum = 1;
        for (long x = 1; x <= s; ++x)
            for (long y = 1; y <= n - s; ++y)
                sum += binomial(n - 1, x) * binomial(n - x - 1, y - 1);
        return sum;
    }
    case BoundClass::SuffixClosed: {
        if (S == 0) return n;
        if (S == full) return power(2, n - 1);
        Big sum = 1;
        for (long x = 1; x <= s; ++x)
            for (long y = 1; y <= n - s; ++y)
                sum += binomial(n - 1, y) * binomial(n - y - 1, x - 1);
        return sum;
    }
    case BoundClass::SuffixFree: {
        const std::uint64_t middle = ((1ull << (n - 1)) - 1) & ~1ull; // {1..n-2}
        if (S == 0) return power(2, n - 2) + 1;
        if (S == 1) return n; // S = {0}
        require((S & ~middle) == 0 && S != 0, "suffix-free atoms: S = {0} or S within {1..n-2}");
        Big sum = 1;
        for (long x = 1; x <= s; ++x)
            for (long y = 0; y <= n - 2 - s; ++y)
                sum += binomial(n - 2, x) * binomial(n - 2 - x, y);
        return sum;
    }
    case BoundClass::BifixFreeMaxStream: {
        const std::uint64_t middle = ((1ull << (n - 2)) - 1) & ~1ull; // {1..n-3}
        if (S == 0) return power(2, n - 2) + 1;
        if (S == 1) return n;                   // S = {0}
        if (S == (1ull << (n - 2))) return 2;   // S = {n-2}
        require((S & ~middle) == 0 && S != 0, "bifix-free atoms: S within {1..n-3} or special");
        Big sum = 3;
        for (long x = 1; x <= s; ++x)
            for (long y = 0; y <= n - 3 - s; ++y)
                sum += binomial(n - 3, x) * binomial(n - 3 - x, y);
        return sum;
    }
    case BoundClass::TwoSidedIdeal: {
        if (S == full) return n;
        if (S == (full & ~2ull)) return power(2, n - 2) + n - 1; // S = Q_n minus {1}
        require((S >> (n - 1)) & 1, "two-sided-ideal atoms contain the Sigma* quotient");
        Big sum = 1;
        for (long x = 1; x <= s; ++x)
            for (long y = 1; y <= n - s; ++y)
                sum += binomial(n - 2, x - 1) * binomial(n - x - 1, y - 1);
        return sum;
    }
    case BoundClass::NonReturning: {
        if (S == 0 || S == full) return power(2, n - 1);
        // inner sum runs over the complement's size; the pair automaton acts
        // on Q_n minus {0} after the first letter
        Big sum = 2;
        for (long x = 1; x <= s; ++x)
            for (long y = 1; y <= n - s; ++y)
                sum += binomial(n - 1, x) * binomial(n - 1 - x, y);
        return sum;
    }
    default:
        domain_error("atom_bound: no atom formulas for class " + class_name(cls));
    }
}

std::uint64_t regular_atom_bound(StateId n, std::uint64_t S) {
    return mpz_get_ui(atom_bound(BoundClass::Regular, n, -1, S).get_mpz_t());
}

std::vector<long> expected_quotient_profile(BoundClass cls, long n, long k) {
    std::vector<long> p;
    switch (cls) {
    case BoundClass::Regular:
    case BoundClass::LeftIdeal:
    case BoundClass::SuffixClosed:
    case BoundClass::TwoSidedIdeal:
        p.assign(n, n);
        break;
    case BoundClass::RightIdeal:
    case BoundClass::PrefixClosed:
        p.assign(n - 1, n);
        p.push_back(1);
        break;
    case BoundClass::PrefixFree:
        p.assign(n - 2, n);
        p.push_back(2);
        p.push_back(1);
        break;
    case BoundClass::ProperPrefixConvex:
        require(k >= 1 && k <= n - 2, "1 <= k <= n-2 required");
        p.assign(n - 1 - k, n);
        p.insert(p.end(), k, k + 1);
        p.push_back(1);
        break;
    case BoundClass::SuffixFree:
        p.assign(n - 2, n - 1);
        p.push_back(n);
        p.push_back(1);
        break;
    case BoundClass::BifixFree:
        p.assign(n - 3, n - 1);
        p.push_back(n);
        p.push_back(2);
        p.push_back(1);
        break;
    case BoundClass::NonReturning:
        p.assign(n - 1, n - 1);
        p.push_back(n);
        break;
    default:
        domain_error("expected_quotient_profile: none stated for " + class_name(cls));
    }
    std::sort(p.begin(), p.end());
    return p;
}

namespace {
const std::pair<const char*, BoundClass> kClassNames[] = {
    {"regular", BoundClass::Regular},
    {"right_ideal", BoundClass::RightIdeal},
    {"prefix_closed", BoundClass::PrefixClosed},
    {"prefix_free", BoundClass::PrefixFree},
    {"proper_prefix_convex", BoundClass::ProperPrefixConvex},
    {"left_ideal", BoundClass::LeftIdeal},
    {"suffix_closed", BoundClass::SuffixClosed},
    {"suffix_free", BoundClass::SuffixFree},
    {"bifix_free", BoundClass::BifixFree},
    {"bifix_free_max_stream", BoundClass::BifixFreeMaxStream},
    {"two_sided_ideal", BoundClass::TwoSidedIdeal},
    {"non_returning", BoundClass::NonReturning},
    {"star_free", BoundClass::StarFree},
    {"j_trivial", BoundClass::JTrivial},
    {"r_trivial", BoundClass::RTrivial},
    {"finite_cofinite", BoundClass::FiniteCofinite},
    {"reverse_definite", BoundClass::ReverseDefinite},
    {"factor_free", BoundClass::FactorFree},
};
const std::pair<const char*, BoundMeasure> kMeasureNames[] = {
    {"semigroup", BoundMeasure::Semigroup},
    {"reversal", BoundMeasure::Reversal},
    {"atom_count", BoundMeasure::AtomCount},
    {"star", BoundMeasure::Star},
    {"product_restricted", BoundMeasure::ProductRestricted},
    {"product_unrestricted", BoundMeasure::ProductUnrestricted},
    {"boolean_restricted", BoundMeasure::BooleanRestricted},
    {"boolean_unrestricted", BoundMeasure::BooleanUnrestricted},
    {"alphabet", BoundMeasure::AlphabetSize},
};
} // namespace

std::optional<BoundClass> class_from_name(const std::string& name) {
    for (const auto& [s, c] : kClassNames)
        if (name == s) return c;
    return std::nullopt;
}

std::string class_name(BoundClass cls) {
    for (const auto& [s, c] : kClassNames)
        if (c == cls) return s;
    return "?";
}

std::optional<BoundMeasure> measure_from_name(const std::string& name) {
    for (const auto& [s, m] : kMeasureNames)
        if (name == s) return m;
    return std::nullopt;
}

std::string measure_name(BoundMeasure m) {
    for (const auto& [s, mm] : kMeasureNames)
        if (mm == m) return s;
    return "?";
}

std::vector<BoundMeasure> measures_for(BoundClass cls) {
    std::vector<BoundMeasure> out;
    for (const auto& [s, m] : kMeasureNames) {
        (void)s;
        BoundQuery q;
        q.cls = cls;
        q.measure = m;
        q.n = 9;
        q.m = 9;
        q.k = 2;
        q.j = 2;
        q.op = BoolOp::intersection();
        try {
            (void)bound(q);
            out.push_back(m);
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

} // namespace aclab::bounds
