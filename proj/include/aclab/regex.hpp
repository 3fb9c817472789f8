#pragma once

#include <memory>
#include <string>
#include <vector>

#include "aclab/automaton.hpp"

namespace aclab {

/// Syntax tree of a regular expression built from the basic languages
/// with union, product and star. Immutable; children shared.
class Expr {
public:
    enum class Kind { Empty, Epsilon, Letter, Union, Product, Star };
    using Ptr = std::shared_ptr<const Expr>;

    static Ptr empty();
    static Ptr epsilon();
    static Ptr letter(std::string name);
    static Ptr make_union(Ptr left, Ptr right);
    static Ptr product(Ptr left, Ptr right);
    static Ptr star(Ptr child);

    Kind kind() const { return kind_; }
    const std::string& letter_name() const { return letter_; }
    const Ptr& left() const { return left_; }
    const Ptr& right() const { return right_; }
    const Ptr& child() const { return left_; }

private:
    Expr(Kind k, std::string letter, Ptr l, Ptr r)
        : kind_(k), letter_(std::move(letter)), left_(std::move(l)), right_(std::move(r)) {}
    Kind kind_;
    std::string letter_;
    Ptr left_, right_;
};

/// Total structural order; equal expressions compare equal node by node.
int compare(const Expr::Ptr& a, const Expr::Ptr& b);
bool expr_equal(const Expr::Ptr& a, const Expr::Ptr& b);

/// epsilon-membership, computed structurally.
bool nullable(const Expr::Ptr& e);

/// Letters occurring in the expression, sorted.
std::vector<std::string> expr_letters(const Expr::Ptr& e);

/// a^{-1}e by the quotient computation rules; returns the raw
/// (un-normalized) tree. Throws on a letter outside the alphabet.
Expr::Ptr derivative(const Expr::Ptr& e, const std::string& a, const Alphabet& alphabet);

/// Left-fold of derivative over the word; the empty word yields e itself.
Expr::Ptr word_derivative(const Expr::Ptr& e, const std::vector<std::string>& w,
                          const Alphabet& alphabet);

/// Canonical representative of the similarity class: unions flattened,
/// deduplicated and sorted; the unit and annihilator rules for the empty
/// language and the empty word applied to fixpoint, bottom-up.
Expr::Ptr similar_normalize(const Expr::Ptr& e);

/// Quotient DFA: explores word derivatives, identifying states by their
/// canonical similarity form. A state is final iff its expression is
/// nullable. The cap guards the provably finite exploration.
Dfa derivative_dfa(const Expr::Ptr& e, const Alphabet& alphabet,
                   std::uint64_t cap = 100'000);

/// Alphabet derived from the expression's own letters.
Dfa derivative_dfa(const Expr::Ptr& e, std::uint64_t cap = 100'000);

/// Text syntax: "%empty", "%eps", single-character letters, "+" union,
/// juxtaposition, postfix "*", parentheses.
Expr::Ptr parse_expr(const std::string& text);
std::string expr_to_string(const Expr::Ptr& e);

} // namespace aclab
