#include "aclab/regex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace aclab {

Expr::Ptr Expr::empty() {
    static Ptr e{new Expr(Kind::Empty, "", nullptr, nullptr)};
    return e;
}
Expr::Ptr Expr::epsilon() {
    static Ptr e{new Expr(Kind::Epsilon, "", nullptr, nullptr)};
    return e;
}
Expr::Ptr Expr::letter(std::string name) {
    return Ptr{new Expr(Kind::Letter, std::move(name), nullptr, nullptr)};
}
Expr::Ptr Expr::make_union(Ptr left, Ptr right) {
    return Ptr{new Expr(Kind::Union, "", std::move(left), std::move(right))};
}
Expr::Ptr Expr::product(Ptr left, Ptr right) {
    return Ptr{new Expr(Kind::Product, "", std::move(left), std::move(right))};
}
Expr::Ptr Expr::star(Ptr child) {
    return Ptr{new Expr(Kind::Star, "", std::move(child), nullptr)};
}

int compare(const Expr::Ptr& a, const Expr::Ptr& b) {
    if (a.get() == b.get()) return 0;
    if (a->kind() != b->kind())
        return static_cast<int>(a->kind()) < static_cast<int>(b->kind()) ? -1 : 1;
    switch (a->kind()) {
    case Expr::Kind::Empty:
    case Expr::Kind::Epsilon:
        return 0;
    case Expr::Kind::Letter:
        return a->letter_name().compare(b->letter_name()) < 0   ? -1
               : a->letter_name().compare(b->letter_name()) > 0 ? 1
                                                                : 0;
    case Expr::Kind::Star:
        return compare(a->child(), b->child());
    case Expr::Kind::Union:
    case Expr::Kind::Product: {
        int c = compare(a->left(), b->left());
        return c != 0 ? c : compare(a->right(), b->right());
    }
    }
    return 0;
}

bool expr_equal(const Expr::Ptr& a, const Expr::Ptr& b) { return compare(a, b) == 0; }

bool nullable(const Expr::Ptr& e) {
    switch (e->kind()) {
    case Expr::Kind::Empty:
    case Expr::Kind::Letter:
        return false;
    case Expr::Kind::Epsilon:
    case Expr::Kind::Star:
        return true;
    case Expr::Kind::Union:
        return nullable(e->left()) || nullable(e->right());
    case Expr::Kind::Product:
        return nullable(e->left()) && nullable(e->right());
    }
    return false;
}

static void collect_letters(const Expr::Ptr& e, std::set<std::string>& out) {
    switch (e->kind()) {
    case Expr::Kind::Letter:
        out.insert(e->letter_name());
        break;
    case Expr::Kind::Union:
    case Expr::Kind::Product:
        collect_letters(e->left(), out);
        collect_letters(e->right(), out);
        break;
    case Expr::Kind::Star:
        collect_letters(e->child(), out);
        break;
    default:
        break;
    }
}

std::vector<std::string> expr_letters(const Expr::Ptr& e) {
    std::set<std::string> s;
    collect_letters(e, s);
    return {s.begin(), s.end()};
}

Expr::Ptr derivative(const Expr::Ptr& e, const std::string& a, const Alphabet& alphabet) {
    if (!alphabet.has(a)) throw std::invalid_argument("derivative: unknown letter " + a);
    switch (e->kind()) {
    case Expr::Kind::Empty:
    case Expr::Kind::Epsilon:
        return Expr::empty();
    case Expr::Kind::Letter:
        return e->letter_name() == a ? Expr::epsilon() : Expr::empty();
    case Expr::Kind::Union:
        return Expr::make_union(derivative(e->left(), a, alphabet),
                                derivative(e->right(), a, alphabet));
    case Expr::Kind::Product: {
        Expr::Ptr first = Expr::product(derivative(e->left(), a, alphabet), e->right());
        if (!nullable(e->left())) return first;
        return Expr::make_union(first, derivative(e->right(), a, alphabet));
    }
    case Expr::Kind::Star:
        return Expr::product(derivative(e->child(), a, alphabet), e);
    }
    return Expr::empty();
}

Expr::Ptr word_derivative(const Expr::Ptr& e, const std::vector<std::string>& w,
                          const Alphabet& alphabet) {
    Expr::Ptr cur = e;
    for (const std::string& a : w) cur = derivative(cur, a, alphabet);
    return cur;
}

namespace {

struct PtrCompare {
    bool operator()(const Expr::Ptr& a, const Expr::Ptr& b) const { return compare(a, b) < 0; }
};

void flatten_union(const Expr::Ptr& e, std::vector<Expr::Ptr>& out) {
    if (e->kind() == Expr::Kind::Union) {
        flatten_union(e->left(), out);
        flatten_union(e->right(), out);
    } else {
        out.push_back(e);
    }
}

} // namespace

Expr::Ptr similar_normalize(const Expr::Ptr& e) {
    switch (e->kind()) {
    case Expr::Kind::Empty:
    case Expr::Kind::Epsilon:
    case Expr::Kind::Letter:
        return e;
    case Expr::Kind::Star:
        return Expr::star(similar_normalize(e->child()));
    case Expr::Kind::Product: {
        Expr::Ptr l = similar_normalize(e->left());
        Expr::Ptr r = similar_normalize(e->right());
        if (l->kind() == Expr::Kind::Empty || r->kind() == Expr::Kind::Empty)
            return Expr::empty();
        if (l->kind() == Expr::Kind::Epsilon) return r;
        if (r->kind() == Expr::Kind::Epsilon) return l;
        return Expr::product(l, r);
    }
    case Expr::Kind::Union: {
        std::vector<Expr::Ptr> parts;
        flatten_union(e, parts);
        std::vector<Expr::Ptr> norm;
        for (const Expr::Ptr& p : parts) {
            Expr::Ptr np = similar_normalize(p);
            if (np->kind() == Expr::Kind::Union)
                flatten_union(np, norm);
            else
                norm.push_back(np);
        }
        std::sort(norm.begin(), norm.end(), PtrCompare{});
        norm.erase(std::unique(norm.begin(), norm.end(),
                               [](const Expr::Ptr& a, const Expr::Ptr& b) {
                                   return compare(a, b) == 0;
                               }),
                   norm.end());
        std::erase_if(norm, [](const Expr::Ptr& p) { return p->kind() == Expr::Kind::Empty; });
        if (norm.empty()) return Expr::empty();
        Expr::Ptr acc = norm.back();
        for (auto it = norm.rbegin() + 1; it != norm.rend(); ++it)
            acc = Expr::make_union(*it, acc);
        return acc;
    }
    }
    return e;
}

Dfa derivative_dfa(const Expr::Ptr& e, const Alphabet& alphabet, std::uint64_t cap) {
    std::map<Expr::Ptr, StateId, PtrCompare> id;
    std::vector<Expr::Ptr> states;
    std::deque<StateId> queue;

    Expr::Ptr start = similar_normalize(e);
    id.emplace(start, 0);
    states.push_back(start);
    queue.push_back(0);

    std::vector<std::vector<StateId>> delta(alphabet.size());
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        Expr::Ptr cur = states[q];
        for (std::uint32_t a = 0; a < alphabet.size(); ++a) {
            Expr::Ptr next = similar_normalize(derivative(cur, alphabet.name(a), alphabet));
            auto [it, fresh] = id.emplace(next, static_cast<StateId>(states.size()));
            if (fresh) {
                if (states.size() >= cap)
                    throw budget_error("derivative_dfa: exploration cap exceeded; "
                                       "dissimilar derivatives should be finite",
                                       states.size());
                states.push_back(next);
                queue.push_back(it->second);
            }
            delta[a].push_back(it->second);
        }
    }

    Dfa d;
    d.alphabet = alphabet;
    d.num_states = static_cast<StateId>(states.size());
    d.initial = 0;
    d.accepting.resize(d.num_states);
    for (StateId q = 0; q < d.num_states; ++q) d.accepting[q] = nullable(states[q]);
    for (std::uint32_t a = 0; a < alphabet.size(); ++a) d.delta.emplace_back(std::move(delta[a]));
    d.validate();
    return d;
}

Dfa derivative_dfa(const Expr::Ptr& e, std::uint64_t cap) {
    std::vector<std::string> letters = expr_letters(e);
    if (letters.empty()) {
        // the language is either empty or {eps}; a one-letter alphabet keeps
        // the DFA non-degenerate for downstream operations
        return derivative_dfa(e, Alphabet{{"a"}}, cap);
    }
    return derivative_dfa(e, Alphabet{letters}, cap);
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Expr::Ptr parse() {
        Expr::Ptr e = parse_union();
        skip_ws();
        if (pos_ != text_.size())
            throw std::invalid_argument("expression parse error at position " +
                                        std::to_string(pos_));
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_atom() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        char c = text_[pos_];
        return c == '(' || c == '%' || (c != ')' && c != '+' && c != '*');
    }

    Expr::Ptr parse_union() {
        Expr::Ptr e = parse_concat();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '+') {
                ++pos_;
                e = Expr::make_union(e, parse_concat());
            } else {
                return e;
            }
        }
    }

    Expr::Ptr parse_concat() {
        Expr::Ptr e = parse_postfix();
        while (at_atom()) e = Expr::product(e, parse_postfix());
        return e;
    }

    Expr::Ptr parse_postfix() {
        Expr::Ptr e = parse_atom();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                e = Expr::star(e);
            } else {
                return e;
            }
        }
    }

    Expr::Ptr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw std::invalid_argument("expression: unexpected end");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr::Ptr e = parse_union();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw std::invalid_argument("expression: missing ')'");
            ++pos_;
            return e;
        }
        if (c == '%') {
            if (text_.compare(pos_, 6, "%empty") == 0) {
                pos_ += 6;
                return Expr::empty();
            }
            if (text_.compare(pos_, 4, "%eps") == 0) {
                pos_ += 4;
                return Expr::epsilon();
            }
            throw std::invalid_argument("expression: unknown %-token");
        }
        if (c == ')' || c == '+' || c == '*')
            throw std::invalid_argument(std::string("expression: unexpected '") + c + "'");
        ++pos_;
        return Expr::letter(std::string(1, c));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

void print(const Expr::Ptr& e, std::string& out, int parent_prec) {
    // precedence: union 1, product 2, star 3
    switch (e->kind()) {
    case Expr::Kind::Empty:
        out += "%empty";
        break;
    case Expr::Kind::Epsilon:
        out += "%eps";
        break;
    case Expr::Kind::Letter:
        out += e->letter_name();
        break;
    case Expr::Kind::Union: {
        bool paren = parent_prec > 1;
        if (paren) out += '(';
        print(e->left(), out, 1);
        out += '+';
        print(e->right(), out, 1);
        if (paren) out += ')';
        break;
    }
    case Expr::Kind::Product: {
        bool paren = parent_prec > 2;
        if (paren) out += '(';
        print(e->left(), out, 2);
        print(e->right(), out, 2);
        if (paren) out += ')';
        break;
    }
    case Expr::Kind::Star:
        print(e->child(), out, 3);
        out += '*';
        break;
    }
}

} // namespace

Expr::Ptr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string expr_to_string(const Expr::Ptr& e) {
    std::string out;
    print(e, out, 0);
    return out;
}

} // namespace aclab
