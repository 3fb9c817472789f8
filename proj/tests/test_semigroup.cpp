#include <doctest.h>

#include <random>

#include "aclab/semigroup.hpp"
#include "aclab/witness.hpp"
#include "testutil.hpp"

using namespace aclab;
using namespace aclab::test;

TEST_CASE("transition semigroup of the 3-letter regular witness is full") {
    Dfa d = make_witness(WitnessClass::Regular3, 3);
    TransitionSemigroup sg = transition_semigroup(d);
    CHECK(sg.elements.size() == 27);
    CHECK(sg.has_identity);

    // closure: composing any two elements stays inside
    for (const auto& s : sg.elements)
        for (const auto& t : sg.elements) {
            Transformation c = compose(s, t);
            CHECK(std::find(sg.elements.begin(), sg.elements.end(), c) != sg.elements.end());
        }
}

TEST_CASE("semigroup of Sigma^{n-2} with n = 4 has n - 1 elements") {
    TransitionSemigroup sg = transition_semigroup(sigma_power_dfa(2));
    CHECK(sg.elements.size() == 3);
    CHECK_FALSE(sg.has_identity);
}

TEST_CASE("left-ideal witness semigroup size at n = 4") {
    CHECK(syntactic_complexity(make_witness(WitnessClass::LeftIdeal, 4)) == 67); // 4^3 + 3
}

TEST_CASE("syntactic complexity of witnesses") {
    CHECK(syntactic_complexity(make_witness(WitnessClass::Regular4, 4)) == 256);
    CHECK(syntactic_complexity(make_witness(WitnessClass::RightIdeal, 4)) == 64);
    CHECK(syntactic_complexity(make_witness(WitnessClass::TwoSidedIdeal, 5)) == 150);
}

TEST_CASE("semigroup limit reports the partial count") {
    Dfa d = make_witness(WitnessClass::Regular4, 5);
    CHECK_THROWS_AS(transition_semigroup(d, 100), budget_error);
}

TEST_CASE("witness words generate their elements") {
    Dfa d = make_witness(WitnessClass::Regular3, 4);
    TransitionSemigroup sg = transition_semigroup(d, limits::semigroup_limit(), true);
    REQUIRE(sg.witness_words.size() == sg.elements.size());
    for (std::size_t i = 0; i < sg.elements.size(); ++i) {
        Transformation t = Transformation::identity(4);
        for (char ch : sg.witness_words[i])
            t = compose(t, d.delta[*d.alphabet.index(std::string(1, ch))]);
        CHECK(t == sg.elements[i]);
    }
}

TEST_CASE("rank and permutation subgroup") {
    Dfa d = make_witness(WitnessClass::Regular3, 3);
    TransitionSemigroup sg = transition_semigroup(d);
    PermutationGroup g = permutation_subgroup(sg, 3);
    CHECK(g.elements.size() == 6); // S_3

    TransitionSemigroup shifts = transition_semigroup(sigma_power_dfa(2));
    CHECK(permutation_subgroup(shifts, 4).elements.empty());

    // suffix-free witnesses have a sink, so no permutation has full rank
    TransitionSemigroup sf =
        transition_semigroup(make_witness(WitnessClass::SuffixFreeSemigroup, 5));
    CHECK(permutation_subgroup(sf, 5).elements.empty());
}

TEST_CASE("set transitivity") {
    // S_4 via the regular witness restricted to {a,b}
    Dfa d = apply_dialect(make_witness(WitnessClass::Regular4, 4), Dialect::parse("a,b"));
    PermutationGroup s4 = permutation_subgroup(transition_semigroup(d), 4);
    CHECK(s4.elements.size() == 24);
    CHECK(is_set_transitive(s4, 4));

    // A_3 generated by the 3-cycle
    Dfa c3 = dfa_of({"a"}, {{1, 2, 0}}, {0});
    PermutationGroup a3 = permutation_subgroup(transition_semigroup(c3), 3);
    CHECK(a3.elements.size() == 3);
    CHECK(is_set_transitive(a3, 3));

    // the transposition (0,1) alone is not transitive on Q_4
    Dfa t01 = dfa_of({"a"}, {{1, 0, 2, 3}}, {0});
    PermutationGroup g = permutation_subgroup(transition_semigroup(t01), 4);
    CHECK_FALSE(is_set_transitive(g, 4));
}

TEST_CASE("small groups fail halfway set-transitivity by orbit counting") {
    for (StateId n : {4, 5, 6}) {
        // cyclic group of order n
        std::vector<StateId> rot(n);
        for (StateId q = 0; q < n; ++q) rot[q] = (q + 1) % n;
        Dfa d = dfa_of({"a"}, {rot}, {0});
        PermutationGroup g = permutation_subgroup(transition_semigroup(d), n);
        std::uint64_t half = n / 2, c = 1;
        for (StateId i = 0; i < half; ++i) c = c * (n - i) / (i + 1);
        if (g.elements.size() < c) CHECK_FALSE(is_set_transitive(g, n));
    }
}

TEST_CASE("aperiodicity") {
    CHECK(is_aperiodic(transition_semigroup(sigma_power_dfa(2))));
    CHECK_FALSE(is_aperiodic(transition_semigroup(make_witness(WitnessClass::Regular3, 3))));
    CHECK(is_aperiodic(transition_semigroup(contains_ab())));
}

TEST_CASE("conjugate bases") {
    TransformSpec cs, ts;
    cs.cycle({0, 1, 2});
    ts.cycle({0, 1});
    Transformation s = compile(cs, 3), t = compile(ts, 3);
    CHECK(conjugate_bases(s, t, s, t)); // r = identity

    TransformSpec rs;
    rs.cycle({0, 1});
    Transformation r = compile(rs, 3);
    CHECK(conjugate_bases(s, t, conjugate(r, s), conjugate(r, t)));

    // different cycle types cannot be conjugate
    TransformSpec t2;
    t2.cycle({0, 1, 2});
    CHECK_FALSE(conjugate_bases(s, t, s, compile(t2, 3)));

    TransformSpec bad;
    bad.send(0, 1);
    CHECK_THROWS_AS(conjugate_bases(s, t, s, compile(bad, 3)), std::invalid_argument);
}

TEST_CASE("perm-reachable pairs of synchronized cyclic copies stay diagonal") {
    std::vector<StateId> rot{1, 2, 3, 0};
    Dfa d = dfa_of({"a"}, {rot}, {0});
    auto pairs = perm_reachable_states(d, d);
    CHECK(pairs.size() == 4);
    for (auto [p, q] : pairs) CHECK(p == q);
}

TEST_CASE("semigroup report json") {
    SemigroupReport r = semigroup_report(make_witness(WitnessClass::Regular3, 3));
    CHECK(r.size == 27);
    CHECK(r.perm_subgroup_size == 6);
    CHECK_FALSE(r.aperiodic);
    CHECK(r.has_identity);
    std::string j = semigroup_report_json(r);
    CHECK(j.find("\"size\": 27") != std::string::npos);
}
