#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "aclab/automaton.hpp"
#include "aclab/regex.hpp"

namespace aclab::test {

inline Alphabet ab() { return Alphabet{{"a", "b"}}; }

/// DFA from image rows, initial 0.
inline Dfa dfa_of(std::vector<std::string> letters, std::vector<std::vector<StateId>> rows,
                  std::vector<StateId> finals, StateId initial = 0) {
    Dfa d;
    d.alphabet = Alphabet{std::move(letters)};
    d.num_states = static_cast<StateId>(rows.empty() ? 1 : rows[0].size());
    d.initial = initial;
    d.accepting.assign(d.num_states, false);
    for (StateId f : finals) d.accepting[f] = true;
    for (auto& r : rows) d.delta.emplace_back(std::move(r));
    d.validate();
    return d;
}

/// Minimal DFA of Sigma^{len} over `k` letters (n = len + 2 states).
inline Dfa sigma_power_dfa(StateId len, std::uint32_t k = 1) {
    std::vector<std::string> letters;
    for (std::uint32_t i = 0; i < k; ++i) letters.push_back(std::string(1, char('a' + i)));
    StateId n = len + 2;
    std::vector<StateId> row(n);
    for (StateId q = 0; q + 1 < n; ++q) row[q] = q + 1;
    row[n - 1] = n - 1;
    std::vector<std::vector<StateId>> rows(k, row);
    return dfa_of(letters, std::move(rows), {len});
}

/// (aa)* over {a}.
inline Dfa even_as() { return dfa_of({"a"}, {{1, 0}}, {0}); }

/// Sigma* a b Sigma* over {a,b}.
inline Dfa contains_ab() {
    return dfa_of({"a", "b"}, {{1, 1, 2}, {0, 2, 2}}, {2});
}

inline Dfa random_dfa(std::mt19937& rng, StateId n, std::uint32_t k,
                      bool nontrivial_finals = true) {
    std::vector<std::string> letters;
    for (std::uint32_t i = 0; i < k; ++i) letters.push_back(std::string(1, char('a' + i)));
    std::uniform_int_distribution<StateId> st(0, n - 1);
    Dfa d;
    d.alphabet = Alphabet{letters};
    d.num_states = n;
    d.initial = 0;
    for (std::uint32_t a = 0; a < k; ++a) {
        std::vector<StateId> img(n);
        for (StateId q = 0; q < n; ++q) img[q] = st(rng);
        d.delta.emplace_back(std::move(img));
    }
    for (;;) {
        d.accepting.assign(n, false);
        bool any = false, all = true;
        for (StateId q = 0; q < n; ++q) {
            bool f = rng() & 1;
            d.accepting[q] = f;
            any |= f;
            all &= f;
        }
        if (n < 2 || !nontrivial_finals || (any && !all)) break;
    }
    return d;
}

inline Nfa random_nfa(std::mt19937& rng, StateId n, std::uint32_t k) {
    std::vector<std::string> letters;
    for (std::uint32_t i = 0; i < k; ++i) letters.push_back(std::string(1, char('a' + i)));
    std::uniform_int_distribution<StateId> st(0, n - 1);
    Nfa nfa;
    nfa.alphabet = Alphabet{letters};
    nfa.num_states = n;
    std::uniform_int_distribution<int> density(0, 99);
    for (std::uint32_t a = 0; a < k; ++a)
        for (StateId p = 0; p < n; ++p)
            for (StateId q = 0; q < n; ++q)
                if (density(rng) < 150 / n) nfa.transitions.push_back({p, (std::int32_t)a, q});
    nfa.initials = {st(rng)};
    nfa.finals = {st(rng)};
    if (rng() & 1) nfa.finals.push_back(st(rng));
    std::sort(nfa.finals.begin(), nfa.finals.end());
    nfa.finals.erase(std::unique(nfa.finals.begin(), nfa.finals.end()), nfa.finals.end());
    return nfa;
}

/// All words of length <= max_len as letter-index vectors (k letters).
inline std::vector<Word> all_words(std::uint32_t k, std::uint32_t max_len) {
    std::vector<Word> out{{}};
    std::size_t level_start = 0;
    for (std::uint32_t len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i)
            for (std::uint32_t a = 0; a < k; ++a) {
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        level_start = level_end;
    }
    return out;
}

/// Thompson construction; the independent oracle for the derivative DFA.
inline Nfa thompson_nfa(const Expr::Ptr& e, const Alphabet& alphabet) {
    Nfa n;
    n.alphabet = alphabet;
    std::vector<NfaTransition>& tr = n.transitions;
    // returns (start, accept)
    auto fresh = [&n]() { return n.num_states++; };
    std::function<std::pair<StateId, StateId>(const Expr::Ptr&)> build =
        [&](const Expr::Ptr& x) -> std::pair<StateId, StateId> {
        StateId s = fresh(), t = fresh();
        switch (x->kind()) {
        case Expr::Kind::Empty:
            break;
        case Expr::Kind::Epsilon:
            tr.push_back({s, kEpsilon, t});
            break;
        case Expr::Kind::Letter:
            tr.push_back({s, (std::int32_t)*alphabet.index(x->letter_name()), t});
            break;
        case Expr::Kind::Union: {
            auto [ls, lt] = build(x->left());
            auto [rs, rt] = build(x->right());
            tr.push_back({s, kEpsilon, ls});
            tr.push_back({s, kEpsilon, rs});
            tr.push_back({lt, kEpsilon, t});
            tr.push_back({rt, kEpsilon, t});
            break;
        }
        case Expr::Kind::Product: {
            auto [ls, lt] = build(x->left());
            auto [rs, rt] = build(x->right());
            tr.push_back({s, kEpsilon, ls});
            tr.push_back({lt, kEpsilon, rs});
            tr.push_back({rt, kEpsilon, t});
            break;
        }
        case Expr::Kind::Star: {
            auto [cs, ct] = build(x->child());
            tr.push_back({s, kEpsilon, cs});
            tr.push_back({ct, kEpsilon, cs});
            tr.push_back({s, kEpsilon, t});
            tr.push_back({ct, kEpsilon, t});
            break;
        }
        }
        return {s, t};
    };
    auto [s, t] = build(e);
    n.initials = {s};
    n.finals = {t};
    return n;
}

/// Random expression over {a,b} with bounded depth, for oracle corpora.
inline Expr::Ptr random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 9);
    switch (pick(rng)) {
    case 0: return Expr::letter("a");
    case 1: return Expr::letter("b");
    case 2: return Expr::epsilon();
    case 3: return rng() % 8 == 0 ? Expr::empty() : Expr::letter("a");
    case 4:
    case 5: return Expr::make_union(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 6:
    case 7: return Expr::product(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: return Expr::star(random_expr(rng, depth - 1));
    }
}

} // namespace aclab::test
