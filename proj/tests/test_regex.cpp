#include <doctest.h>

#include <random>

#include "aclab/regex.hpp"
#include "testutil.hpp"

using namespace aclab;
using namespace aclab::test;

namespace {
const Alphabet kAB{{"a", "b"}};
Expr::Ptr A() { return Expr::letter("a"); }
Expr::Ptr B() { return Expr::letter("b"); }
} // namespace

TEST_CASE("derivative of basic languages") {
    CHECK(expr_equal(derivative(A(), "a", kAB), Expr::epsilon()));
    CHECK(expr_equal(derivative(B(), "a", kAB), Expr::empty()));
    CHECK(expr_equal(derivative(Expr::empty(), "a", kAB), Expr::empty()));
    CHECK(expr_equal(derivative(Expr::epsilon(), "a", kAB), Expr::empty()));
    CHECK_THROWS_AS(derivative(A(), "z", kAB), std::invalid_argument);
}

TEST_CASE("derivative of star keeps the raw product shape") {
    Expr::Ptr astar = Expr::star(A());
    Expr::Ptr d = derivative(astar, "a", kAB);
    CHECK(d->kind() == Expr::Kind::Product);
    CHECK(expr_equal(d->left(), Expr::epsilon()));
    CHECK(expr_equal(similar_normalize(d), astar));
}

TEST_CASE("product rule splits on nullability") {
    // a^{-1}(ab) = b
    Expr::Ptr e = Expr::product(A(), B());
    CHECK(expr_equal(similar_normalize(derivative(e, "a", kAB)), B()));
    // a^{-1}(a* b) = a* b  (nullable left operand)
    Expr::Ptr f = Expr::product(Expr::star(A()), B());
    CHECK(expr_equal(similar_normalize(derivative(f, "a", kAB)), similar_normalize(f)));
}

TEST_CASE("word derivative") {
    Expr::Ptr e = Expr::product(A(), B());
    CHECK(expr_equal(word_derivative(e, {}, kAB), e));
    CHECK(expr_equal(similar_normalize(word_derivative(e, {"a", "b"}, kAB)), Expr::epsilon()));
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        Expr::Ptr x = random_expr(rng, 4);
        CHECK(expr_equal(word_derivative(x, {"a", "b"}, kAB),
                         derivative(derivative(x, "a", kAB), "b", kAB)));
    }
}

TEST_CASE("similarity rules") {
    Expr::Ptr l = Expr::product(A(), B());
    CHECK(expr_equal(similar_normalize(Expr::make_union(l, l)), similar_normalize(l)));
    CHECK(expr_equal(similar_normalize(Expr::make_union(l, Expr::empty())),
                     similar_normalize(l)));
    CHECK(expr_equal(similar_normalize(Expr::make_union(B(), A())),
                     similar_normalize(Expr::make_union(A(), B()))));
    // associativity: flattened unions normalize identically
    Expr::Ptr left = Expr::make_union(Expr::make_union(A(), B()), Expr::star(A()));
    Expr::Ptr right = Expr::make_union(A(), Expr::make_union(B(), Expr::star(A())));
    CHECK(expr_equal(similar_normalize(left), similar_normalize(right)));
    // unit rules
    CHECK(expr_equal(similar_normalize(Expr::product(Expr::epsilon(), l)), similar_normalize(l)));
    CHECK(expr_equal(similar_normalize(Expr::product(l, Expr::empty())), Expr::empty()));
}

TEST_CASE("similar_normalize is idempotent") {
    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        Expr::Ptr e = similar_normalize(random_expr(rng, 5));
        CHECK(expr_equal(similar_normalize(e), e));
    }
}

TEST_CASE("derivative_dfa basics") {
    Dfa empty = derivative_dfa(Expr::empty(), kAB);
    CHECK(empty.num_states == 1);
    CHECK_FALSE(empty.accepting[0]);

    Dfa sigma_star = derivative_dfa(Expr::star(Expr::make_union(A(), B())), kAB);
    CHECK(sigma_star.num_states == 1);
    CHECK(sigma_star.accepting[0]);
}

TEST_CASE("derivative_dfa equals the Thompson oracle on a corpus") {
    std::mt19937 rng(91);
    for (int i = 0; i < 50; ++i) {
        Expr::Ptr e = random_expr(rng, 6);
        Dfa derived = derivative_dfa(e, kAB);
        Dfa oracle = determinize(thompson_nfa(e, kAB));
        CHECK(language_equal(derived, oracle));
    }
}

TEST_CASE("acceptance matches nullability of the word derivative") {
    std::mt19937 rng(37);
    auto words = all_words(2, 6);
    for (int i = 0; i < 25; ++i) {
        Expr::Ptr e = random_expr(rng, 4);
        Dfa d = derivative_dfa(e, kAB);
        for (const Word& w : words) {
            std::vector<std::string> letters;
            for (auto idx : w) letters.push_back(kAB.name(idx));
            CHECK(d.accepts(w) == nullable(word_derivative(e, letters, kAB)));
        }
    }
}

TEST_CASE("minimal DFA is no larger than the derivative DFA") {
    std::mt19937 rng(101);
    for (int i = 0; i < 50; ++i) {
        Expr::Ptr e = random_expr(rng, 5);
        Dfa d = derivative_dfa(e, kAB);
        CHECK(minimize(d).num_states <= d.num_states);
    }
}

TEST_CASE("normalization preserves the language") {
    std::mt19937 rng(59);
    for (int i = 0; i < 50; ++i) {
        Expr::Ptr e = random_expr(rng, 5);
        CHECK(language_equal(derivative_dfa(e, kAB),
                             derivative_dfa(similar_normalize(e), kAB)));
    }
}

TEST_CASE("expression parser") {
    CHECK(expr_to_string(parse_expr("(a+b)*ab")) == "(a+b)*ab");
    CHECK(parse_expr("%empty")->kind() == Expr::Kind::Empty);
    CHECK(parse_expr("%eps")->kind() == Expr::Kind::Epsilon);
    CHECK(expr_equal(parse_expr("a+b+a"), Expr::make_union(Expr::make_union(A(), B()), A())));
    Dfa d = derivative_dfa(parse_expr("(a+b)* a b (a+b)*"));
    CHECK(language_equal(minimize(d), contains_ab()));
    CHECK_THROWS_AS(parse_expr("(a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("a+"), std::invalid_argument);
}
