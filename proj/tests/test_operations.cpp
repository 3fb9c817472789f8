#include <doctest.h>

#include <random>

#include "aclab/ops.hpp"
#include "aclab/witness.hpp"
#include "testutil.hpp"

using namespace aclab;
using namespace aclab::test;

namespace {
Dfa wit(WitnessClass c, StateId n, const char* dialect = nullptr) {
    Dfa d = make_witness(c, n);
    return dialect ? apply_dialect(d, Dialect::parse(dialect)) : d;
}
} // namespace

TEST_CASE("reverse of witnesses") {
    CHECK(reverse(wit(WitnessClass::Regular4, 4, "a,b,c")).num_states == 16);
    CHECK(reverse(wit(WitnessClass::LeftIdeal, 4)).num_states == 9);
    Dfa e = even_as();
    Dfa r = reverse(e);
    CHECK(r.num_states == 2);
    CHECK(language_equal(r, e));
}

TEST_CASE("reverse twice preserves the language") {
    std::mt19937 rng(3);
    for (int i = 0; i < 40; ++i) {
        Dfa d = random_dfa(rng, 6, 2);
        CHECK(language_equal(reverse(reverse(d)), d));
    }
}

TEST_CASE("star of witnesses") {
    CHECK(star(wit(WitnessClass::Regular4, 4, "a,b")).num_states == 12);
    CHECK(star(wit(WitnessClass::RightIdeal, 5)).num_states == 6);
    CHECK(star(sigma_star_dfa(ab())).num_states == 1);
}

TEST_CASE("star bound holds on random DFAs") {
    std::mt19937 rng(5);
    for (int i = 0; i < 60; ++i) {
        Dfa d = minimize(random_dfa(rng, 3 + rng() % 4, 2));
        StateId n = d.num_states;
        if (n < 3) continue;
        CHECK(star(d).num_states <= (1u << (n - 1)) + (1u << (n - 2)));
    }
}

TEST_CASE("star is correct at word level") {
    std::mt19937 rng(7);
    auto words = all_words(2, 7);
    for (int i = 0; i < 25; ++i) {
        Dfa d = minimize(random_dfa(rng, 4, 2));
        Dfa s = star(d);
        // oracle: w in L* iff w splits into non-empty L-chunks
        for (const Word& w : words) {
            std::vector<bool> ok(w.size() + 1, false);
            ok[0] = true;
            for (std::size_t i2 = 1; i2 <= w.size(); ++i2)
                for (std::size_t j = 0; j < i2 && !ok[i2]; ++j)
                    if (ok[j] && d.accepts(std::span(w).subspan(j, i2 - j))) ok[i2] = true;
            CHECK(s.accepts(w) == ok[w.size()]);
        }
    }
}

TEST_CASE("product examples") {
    Dfa r3 = wit(WitnessClass::Regular4, 3, "a,b,c");
    CHECK(product(r3, r3, OpMode::Restricted).num_states == 20); // 3*8 - 4

    Dfa left = wit(WitnessClass::Regular4, 3, "a,b,-,c");
    Dfa right = wit(WitnessClass::Regular4, 3, "b,a,-,d");
    CHECK(product(left, right, OpMode::Unrestricted).num_states == 28); // 3*8 + 4

    // {eps} . L = L
    Dfa eps = dfa_of({"a", "b"}, {{1, 1}, {1, 1}}, {0});
    Dfa any = minimize(random_dfa(*new std::mt19937(9), 4, 2));
    CHECK(language_equal(product(eps, any, OpMode::Restricted), any));
}

TEST_CASE("product is associative at the language level") {
    std::mt19937 rng(11);
    for (int i = 0; i < 10; ++i) {
        Dfa a = minimize(random_dfa(rng, 3, 2));
        Dfa b = minimize(random_dfa(rng, 3, 2));
        Dfa c = minimize(random_dfa(rng, 3, 2));
        Dfa ab_c = product(product(a, b, OpMode::Restricted), c, OpMode::Restricted);
        Dfa a_bc = product(a, product(b, c, OpMode::Restricted), OpMode::Restricted);
        CHECK(language_equal(ab_c, a_bc));
    }
}

TEST_CASE("product restricted mode rejects alphabet mismatch") {
    Dfa u = dfa_of({"a"}, {{0}}, {0});
    Dfa v = dfa_of({"b"}, {{0}}, {0});
    CHECK_THROWS_AS(product(u, v, OpMode::Restricted), std::invalid_argument);
    CHECK(product(u, v, OpMode::Unrestricted).alphabet.size() == 2);
}

TEST_CASE("boolean examples from the regular witness") {
    Dfa l = wit(WitnessClass::Regular4, 3, "a,b");
    Dfa r = wit(WitnessClass::Regular4, 3, "b,a");
    CHECK(boolean(l, r, BoolOp::union_op(), OpMode::Restricted).num_states == 9);

    Dfa lu = wit(WitnessClass::Regular4, 3, "a,b,-,c");
    Dfa ru = wit(WitnessClass::Regular4, 3, "b,a,-,d");
    CHECK(boolean(lu, ru, BoolOp::union_op(), OpMode::Unrestricted).num_states == 16);

    // L union L = L
    Dfa w = wit(WitnessClass::Regular4, 4);
    CHECK(boolean(w, w, BoolOp::union_op(), OpMode::Restricted).num_states == 4);
}

TEST_CASE("boolean truth-table semantics at word level") {
    std::mt19937 rng(13);
    auto words = all_words(2, 6);
    for (BoolOp op : proper_boolean_ops()) {
        Dfa a = minimize(random_dfa(rng, 4, 2));
        Dfa b = minimize(random_dfa(rng, 4, 2));
        Dfa c = boolean(a, b, op, OpMode::Restricted);
        for (const Word& w : words)
            CHECK(c.accepts(w) == op.value(a.accepts(w), b.accepts(w)));
    }
}

TEST_CASE("restricted boolean complexity never exceeds mn") {
    std::mt19937 rng(17);
    for (int i = 0; i < 30; ++i) {
        Dfa a = minimize(random_dfa(rng, 2 + rng() % 4, 2));
        Dfa b = minimize(random_dfa(rng, 2 + rng() % 4, 2));
        for (BoolOp op : {BoolOp::union_op(), BoolOp::symmetric_difference()})
            CHECK(boolean(a, b, op, OpMode::Restricted).num_states <=
                  a.num_states * b.num_states);
    }
}

TEST_CASE("De Morgan consistency") {
    std::mt19937 rng(19);
    for (int i = 0; i < 20; ++i) {
        Dfa a = minimize(random_dfa(rng, 4, 2));
        Dfa b = minimize(random_dfa(rng, 4, 2));
        Dfa lhs = boolean(a, b, BoolOp::union_op(), OpMode::Restricted);
        Dfa rhs = complement(
            boolean(complement(a), complement(b), BoolOp::intersection(), OpMode::Restricted));
        CHECK(language_equal(lhs, rhs));
    }
}

TEST_CASE("complement") {
    Dfa d = minimize(random_dfa(*new std::mt19937(23), 5, 2));
    CHECK(language_equal(complement(complement(d)), d));
    Dfa none = empty_language_dfa(ab());
    CHECK(language_equal(complement(none), sigma_star_dfa(ab())));
    CHECK(minimize(complement(wit(WitnessClass::Regular4, 5))).num_states == 5);
}

TEST_CASE("unify_alphabets") {
    Dfa u = dfa_of({"a"}, {{1, 1}}, {1});
    Dfa v = dfa_of({"b"}, {{1, 1}}, {1});
    auto [uu, vv] = unify_alphabets(u, v);
    CHECK(uu.alphabet.size() == 2);
    CHECK(uu.num_states == 3); // gained a sink
    CHECK(vv.num_states == 3);
    // language unchanged: still exactly {a}
    std::uint32_t la = *uu.alphabet.index("a"), lb = *uu.alphabet.index("b");
    CHECK(uu.accepts(Word{la}));
    CHECK_FALSE(uu.accepts(Word{lb}));
    CHECK_FALSE(uu.accepts(Word{la, lb}));
    CHECK(quotient_complexity(uu) == 3);

    // equal alphabets pass through untouched
    Dfa w = wit(WitnessClass::Regular4, 4);
    auto [w1, w2] = unify_alphabets(w, w);
    CHECK(w1.num_states == w.num_states);
    CHECK(w2.num_states == w.num_states);

    // an operand that already has an empty state reuses it
    Dfa pf = wit(WitnessClass::PrefixFree, 4);
    Dfa extra = dfa_of({"z"}, {{0}}, {0});
    auto [pf2, e2] = unify_alphabets(pf, extra);
    CHECK(pf2.num_states == pf.num_states);
}

TEST_CASE("boolean op names and masks") {
    CHECK(BoolOp::from_mask_string("0110") == BoolOp::symmetric_difference());
    CHECK(BoolOp::from_name("union").value() == BoolOp::union_op());
    CHECK(BoolOp::from_name("nand").value().proper());
    CHECK_FALSE(BoolOp::from_name("nope").has_value());
    CHECK_THROWS_AS(BoolOp::from_mask_string("012"), std::invalid_argument);
    CHECK(proper_boolean_ops().size() == 10);
    CHECK_FALSE(BoolOp{0b0000}.proper()); // constant
    CHECK_FALSE(BoolOp{0b1100}.proper()); // first projection
    CHECK(BoolOp::union_op().name() == "union");
}
