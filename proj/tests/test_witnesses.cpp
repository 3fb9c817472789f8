#include <doctest.h>

#include "aclab/classify.hpp"
#include "aclab/ops.hpp"
#include "aclab/witness.hpp"
#include "testutil.hpp"

using namespace aclab;
using namespace aclab::test;

TEST_CASE("regular4 witness at n = 4 matches the definition") {
    Dfa d = make_witness(WitnessClass::Regular4, 4);
    CHECK(d.alphabet.letters() == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(d.delta[0].images() == std::vector<StateId>{1, 2, 3, 0});
    CHECK(d.delta[1].images() == std::vector<StateId>{1, 0, 2, 3});
    CHECK(d.delta[2].images() == std::vector<StateId>{0, 1, 2, 0});
    CHECK(d.delta[3].images() == std::vector<StateId>{0, 1, 2, 3});
    CHECK(d.initial == 0);
    CHECK(d.final_states() == std::vector<StateId>{3});
}

TEST_CASE("left-ideal witness letters at n = 4") {
    Dfa d = make_witness(WitnessClass::LeftIdeal, 4);
    CHECK(d.delta[0].images() == std::vector<StateId>{0, 2, 3, 1}); // a = (1,2,3)
    CHECK(d.delta[4].images() == std::vector<StateId>{1, 1, 1, 1}); // e = (Q -> 1)
}

TEST_CASE("non-returning witness: alphabet size and no transition into 0") {
    Dfa d = make_witness(WitnessClass::NonReturning, 4);
    CHECK(d.alphabet.size() == 6); // C(4,2)
    for (std::uint32_t a = 0; a < d.alphabet.size(); ++a) {
        CHECK(d.delta[a].rank() == 3); // every letter has rank n-1
        for (StateId q = 0; q < d.num_states; ++q) CHECK(d.delta[a][q] != 0);
    }
}

TEST_CASE("prefix-free witness: a and b coincide at n = 4, alphabet n + 2") {
    Dfa d4 = make_witness(WitnessClass::PrefixFree, 4);
    CHECK(d4.alphabet.size() == 6);
    CHECK(d4.delta[0] == d4.delta[1]);
    Dfa d5 = make_witness(WitnessClass::PrefixFree, 5);
    CHECK(d5.alphabet.size() == 7);
    CHECK(d5.delta[0] != d5.delta[1]);
    // d: (0 -> n-2)(everything else -> n-1)
    CHECK(d5.delta[3].images() == std::vector<StateId>{3, 4, 4, 4, 4});
}

TEST_CASE("suffix-free semigroup witness drops the duplicate letter at n = 4") {
    Dfa d4 = make_witness(WitnessClass::SuffixFreeSemigroup, 4);
    CHECK(d4.alphabet.letters() == std::vector<std::string>{"b", "c", "d", "e"});
    Dfa d5 = make_witness(WitnessClass::SuffixFreeSemigroup, 5);
    CHECK(d5.alphabet.size() == 5);
    CHECK(d5.final_states() == std::vector<StateId>{1, 3});
}

TEST_CASE("witness minimality and complexity across sizes") {
    for (WitnessClass c : all_witness_classes()) {
        StateId lo = witness_min_n(c);
        for (StateId n = lo; n <= std::max<StateId>(lo, 8); ++n) {
            if (witness_takes_k(c)) {
                for (StateId k = 1; k <= n - 2; ++k) {
                    Dfa d = make_witness(c, n, k);
                    CHECK(quotient_complexity(d) == n);
                    CHECK(is_minimal(d));
                }
            } else {
                Dfa d = make_witness(c, n);
                CHECK(quotient_complexity(d) == n);
                CHECK(is_minimal(d));
            }
        }
    }
}

TEST_CASE("witness class membership claims") {
    CHECK(is_right_ideal(make_witness(WitnessClass::RightIdeal, 5)));
    CHECK(is_prefix_closed(make_witness(WitnessClass::PrefixClosed, 5)));
    CHECK(is_prefix_free(make_witness(WitnessClass::PrefixFree, 5)));
    CHECK(is_left_ideal(make_witness(WitnessClass::LeftIdeal, 4)));
    CHECK(is_suffix_closed(make_witness(WitnessClass::SuffixClosed, 5)));
    CHECK(is_suffix_free(make_witness(WitnessClass::SuffixFreeSemigroup, 5)));
    CHECK(is_suffix_free(make_witness(WitnessClass::SuffixFreeOps, 5)));
    Dfa bf = make_witness(WitnessClass::BifixFreeOps, 9);
    CHECK(is_prefix_free(bf));
    CHECK(is_suffix_free(bf));
    Dfa ts = make_witness(WitnessClass::TwoSidedIdeal, 5);
    CHECK(is_right_ideal(ts));
    CHECK(is_left_ideal(ts));
    CHECK(is_two_sided_ideal(ts));
    CHECK(is_non_returning(make_witness(WitnessClass::NonReturning, 4)));
    // the regular witness returns to 0 via a
    CHECK_FALSE(is_non_returning(make_witness(WitnessClass::Regular4, 4)));
    for (StateId k = 1; k <= 3; ++k) {
        Dfa p = make_witness(WitnessClass::ProperPrefixConvex, 5, k);
        CHECK(is_prefix_convex(p));
        CHECK(is_proper_prefix_convex(p));
    }
}

TEST_CASE("witness parameter validation") {
    CHECK_THROWS_AS(make_witness(WitnessClass::Regular4, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_witness(WitnessClass::TwoSidedIdeal, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_witness(WitnessClass::ProperPrefixConvex, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_witness(WitnessClass::ProperPrefixConvex, 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_witness(WitnessClass::Regular4, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_witness(WitnessClass::BifixFreeOps, 8), std::invalid_argument);
    CHECK(make_witness(WitnessClass::BifixFreeOps, 7).num_states == 7);
}

TEST_CASE("dialects rename and delete positionally") {
    Dfa d = make_witness(WitnessClass::Regular4, 4);

    Dfa same = apply_dialect(d, Dialect::identity_for(d.alphabet));
    CHECK(same.alphabet == d.alphabet);
    CHECK(same.delta == d.delta);

    Dfa ab = apply_dialect(d, Dialect::parse("a,b"));
    CHECK(ab.alphabet.letters() == std::vector<std::string>{"a", "b"});
    CHECK(ab.delta[0] == d.delta[0]);
    CHECK(ab.delta[1] == d.delta[1]);

    Dfa swapped = apply_dialect(d, Dialect::parse("b,a,-,c"));
    CHECK(swapped.alphabet.letters() == std::vector<std::string>{"b", "a", "c"});
    CHECK(swapped.delta[0] == d.delta[0]); // position 1 still holds the cycle
    CHECK(swapped.delta[2] == d.delta[3]); // d renamed to c

    CHECK_THROWS_AS(apply_dialect(d, Dialect::parse("a,a")), std::invalid_argument);
    CHECK_THROWS_AS(apply_dialect(d, Dialect::parse("a,b,c,d,e")), std::invalid_argument);
}

TEST_CASE("dialect deletion can break minimality; measurement minimizes") {
    // keeping only the identity letter leaves Sigma* or nothing reachable
    Dfa d = make_witness(WitnessClass::Regular4, 4);
    Dfa only_d = apply_dialect(d, Dialect::parse("-,-,-,d"));
    CHECK(only_d.num_states == 4);
    CHECK(quotient_complexity(only_d) == 1); // the language over {d} is empty
}

TEST_CASE("regular4 restricted to {a,b,c} behaves like the 3-letter master on measures") {
    for (StateId n = 3; n <= 5; ++n) {
        Dfa abc = apply_dialect(make_witness(WitnessClass::Regular4, n), Dialect::parse("a,b,c"));
        CHECK(quotient_complexity(abc) == n);
        CHECK(reverse(abc).num_states == (1u << n));
    }
}

TEST_CASE("witness class names round-trip") {
    for (WitnessClass c : all_witness_classes())
        CHECK(witness_class_from_name(witness_class_name(c)) == c);
    CHECK_FALSE(witness_class_from_name("nonsense").has_value());
}
