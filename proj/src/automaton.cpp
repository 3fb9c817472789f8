#include "aclab/automaton.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace aclab {

namespace limits {

static std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    if (const char* v = std::getenv(name)) {
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && parsed > 0) return parsed;
    }
    return fallback;
}

std::uint64_t semigroup_limit() { return env_or("ACLAB_SEMIGROUP_LIMIT", 10'000'000); }
std::uint64_t subset_limit() { return env_or("ACLAB_SUBSET_LIMIT", 1'000'000); }
std::uint64_t atom_pair_budget() { return env_or("ACLAB_ATOM_PAIR_BUDGET", 5'000'000); }

} // namespace limits

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i].empty())
            throw std::invalid_argument("alphabet: empty letter name");
        for (std::size_t j = i + 1; j < letters_.size(); ++j)
            if (letters_[i] == letters_[j])
                throw std::invalid_argument("alphabet: duplicate letter " + letters_[i]);
    }
}

std::optional<std::uint32_t> Alphabet::index(const std::string& name) const {
    for (std::uint32_t i = 0; i < letters_.size(); ++i)
        if (letters_[i] == name) return i;
    return std::nullopt;
}

bool Alphabet::same_set(const Alphabet& other) const {
    if (size() != other.size()) return false;
    for (const auto& l : letters_)
        if (!other.has(l)) return false;
    return true;
}

StateId Dfa::run(StateId q, std::span<const std::uint32_t> word) const {
    for (std::uint32_t a : word) q = delta[a][q];
    return q;
}

bool Dfa::accepts(std::span<const std::uint32_t> word) const {
    return accepting[run(initial, word)];
}

std::vector<StateId> Dfa::final_states() const {
    std::vector<StateId> f;
    for (StateId q = 0; q < num_states; ++q)
        if (accepting[q]) f.push_back(q);
    return f;
}

void Dfa::validate() const {
    if (num_states == 0) throw std::invalid_argument("dfa: no states");
    if (initial >= num_states) throw std::invalid_argument("dfa: initial out of range");
    if (accepting.size() != num_states) throw std::invalid_argument("dfa: finals size mismatch");
    if (delta.size() != alphabet.size())
        throw std::invalid_argument("dfa: delta must be defined for every letter");
    for (const auto& t : delta)
        if (t.degree() != num_states)
            throw std::invalid_argument("dfa: transformation degree mismatch");
}

void Nfa::validate() const {
    for (StateId q : initials)
        if (q >= num_states) throw std::invalid_argument("nfa: initial out of range");
    for (StateId q : finals)
        if (q >= num_states) throw std::invalid_argument("nfa: final out of range");
    for (const auto& t : transitions) {
        if (t.from >= num_states || t.to >= num_states)
            throw std::invalid_argument("nfa: transition state out of range");
        if (t.letter != kEpsilon &&
            (t.letter < 0 || static_cast<std::uint32_t>(t.letter) >= alphabet.size()))
            throw std::invalid_argument("nfa: transition letter out of range");
    }
}

namespace {

struct MaskTables {
    std::vector<std::vector<std::uint64_t>> move; // [letter][state] -> target mask
    std::vector<std::uint64_t> eps;               // [state] -> eps targets
};

MaskTables mask_tables(const Nfa& nfa) {
    MaskTables t;
    t.move.assign(nfa.alphabet.size(), std::vector<std::uint64_t>(nfa.num_states, 0));
    t.eps.assign(nfa.num_states, 0);
    for (const auto& tr : nfa.transitions) {
        if (tr.letter == kEpsilon)
            t.eps[tr.from] |= 1ull << tr.to;
        else
            t.move[tr.letter][tr.from] |= 1ull << tr.to;
    }
    return t;
}

std::uint64_t eps_closure(std::uint64_t set, const std::vector<std::uint64_t>& eps) {
    std::uint64_t cur = set;
    for (;;) {
        std::uint64_t next = cur;
        for (std::uint64_t rest = cur; rest;) {
            StateId q = static_cast<StateId>(std::countr_zero(rest));
            rest &= rest - 1;
            next |= eps[q];
        }
        if (next == cur) return cur;
        cur = next;
    }
}

} // namespace

bool Nfa::accepts(std::span<const std::uint32_t> word) const {
    if (num_states > limits::kMaxSubsetStates)
        throw std::invalid_argument("nfa: too many states for subset simulation");
    MaskTables t = mask_tables(*this);
    std::uint64_t cur = 0;
    for (StateId q : initials) cur |= 1ull << q;
    cur = eps_closure(cur, t.eps);
    for (std::uint32_t a : word) {
        std::uint64_t next = 0;
        for (std::uint64_t rest = cur; rest;) {
            StateId q = static_cast<StateId>(std::countr_zero(rest));
            rest &= rest - 1;
            next |= t.move[a][q];
        }
        cur = eps_closure(next, t.eps);
    }
    for (StateId q : finals)
        if (cur & (1ull << q)) return true;
    return false;
}

Dfa determinize(const Nfa& nfa, std::uint64_t subset_limit) {
    nfa.validate();
    if (nfa.num_states > limits::kMaxSubsetStates)
        throw std::invalid_argument("determinize: more than 64 NFA states");
    MaskTables t = mask_tables(nfa);

    std::uint64_t fin = 0;
    for (StateId q : nfa.finals) fin |= 1ull << q;

    std::uint64_t init = 0;
    for (StateId q : nfa.initials) init |= 1ull << q;
    init = eps_closure(init, t.eps);

    std::unordered_map<std::uint64_t, StateId> id;
    std::vector<std::uint64_t> subsets;
    std::deque<std::uint64_t> queue;
    id.emplace(init, 0);
    subsets.push_back(init);
    queue.push_back(init);

    const std::uint32_t k = nfa.alphabet.size();
    std::vector<std::vector<StateId>> delta(k);

    while (!queue.empty()) {
        std::uint64_t cur = queue.front();
        queue.pop_front();
        for (std::uint32_t a = 0; a < k; ++a) {
            std::uint64_t next = 0;
            for (std::uint64_t rest = cur; rest;) {
                StateId q = static_cast<StateId>(std::countr_zero(rest));
                rest &= rest - 1;
                next |= t.move[a][q];
            }
            next = eps_closure(next, t.eps);
            auto [it, fresh] = id.emplace(next, static_cast<StateId>(subsets.size()));
            if (fresh) {
                if (subsets.size() >= subset_limit)
                    throw budget_error("determinize: subset budget exceeded", subsets.size());
                subsets.push_back(next);
                queue.push_back(next);
            }
            delta[a].push_back(it->second);
        }
    }

    Dfa d;
    d.alphabet = nfa.alphabet;
    d.num_states = static_cast<StateId>(subsets.size());
    d.initial = 0;
    d.accepting.resize(d.num_states);
    for (StateId q = 0; q < d.num_states; ++q) d.accepting[q] = (subsets[q] & fin) != 0;
    for (std::uint32_t a = 0; a < k; ++a) d.delta.emplace_back(std::move(delta[a]));
    return d;
}

Nfa reverse_nfa(const Dfa& dfa) {
    Nfa r;
    r.alphabet = dfa.alphabet;
    r.num_states = dfa.num_states;
    r.initials = dfa.final_states();
    r.finals = {dfa.initial};
    for (std::uint32_t a = 0; a < dfa.alphabet.size(); ++a)
        for (StateId q = 0; q < dfa.num_states; ++q)
            r.transitions.push_back({dfa.delta[a][q], static_cast<std::int32_t>(a), q});
    return r;
}

Nfa to_nfa(const Dfa& dfa) {
    Nfa n;
    n.alphabet = dfa.alphabet;
    n.num_states = dfa.num_states;
    n.initials = {dfa.initial};
    n.finals = dfa.final_states();
    for (std::uint32_t a = 0; a < dfa.alphabet.size(); ++a)
        for (StateId q = 0; q < dfa.num_states; ++q)
            n.transitions.push_back({q, static_cast<std::int32_t>(a), dfa.delta[a][q]});
    return n;
}

Dfa trim_unreachable(const Dfa& dfa) {
    std::vector<StateId> order;
    std::vector<std::int64_t> newid(dfa.num_states, -1);
    order.push_back(dfa.initial);
    newid[dfa.initial] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::uint32_t a = 0; a < dfa.alphabet.size(); ++a) {
            StateId to = dfa.delta[a][order[i]];
            if (newid[to] < 0) {
                newid[to] = static_cast<std::int64_t>(order.size());
                order.push_back(to);
            }
        }

    Dfa out;
    out.alphabet = dfa.alphabet;
    out.num_states = static_cast<StateId>(order.size());
    out.initial = 0;
    out.accepting.resize(out.num_states);
    for (StateId q = 0; q < out.num_states; ++q) out.accepting[q] = dfa.accepting[order[q]];
    for (std::uint32_t a = 0; a < dfa.alphabet.size(); ++a) {
        std::vector<StateId> img(out.num_states);
        for (StateId q = 0; q < out.num_states; ++q)
            img[q] = static_cast<StateId>(newid[dfa.delta[a][order[q]]]);
        out.delta.emplace_back(std::move(img));
    }
    return out;
}

Dfa canonicalize(const Dfa& dfa) {
    Dfa out = trim_unreachable(dfa);
    if (out.num_states != dfa.num_states)
        throw std::invalid_argument("canonicalize: unreachable states present");
    return out; // trim_unreachable already renumbers BFS in alphabet order
}

Dfa minimize(const Dfa& dfa) {
    dfa.validate();
    Dfa d = trim_unreachable(dfa);
    const std::uint32_t k = d.alphabet.size();

    std::vector<std::uint32_t> block(d.num_states);
    for (StateId q = 0; q < d.num_states; ++q) block[q] = d.accepting[q] ? 1 : 0;

    std::size_t blocks = 2;
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> sig_id;
        std::vector<std::uint32_t> next(d.num_states);
        for (StateId q = 0; q < d.num_states; ++q) {
            std::vector<std::uint32_t> sig;
            sig.reserve(k + 1);
            sig.push_back(block[q]);
            for (std::uint32_t a = 0; a < k; ++a) sig.push_back(block[d.delta[a][q]]);
            auto [it, fresh] = sig_id.emplace(std::move(sig), static_cast<std::uint32_t>(sig_id.size()));
            next[q] = it->second;
        }
        if (sig_id.size() == blocks) {
            block = std::move(next);
            break;
        }
        blocks = sig_id.size();
        block = std::move(next);
    }

    Dfa m;
    m.alphabet = d.alphabet;
    m.num_states = static_cast<StateId>(blocks);
    m.initial = block[d.initial];
    m.accepting.assign(blocks, false);
    std::vector<StateId> rep(blocks, 0);
    std::vector<bool> have(blocks, false);
    for (StateId q = 0; q < d.num_states; ++q) {
        if (!have[block[q]]) {
            have[block[q]] = true;
            rep[block[q]] = q;
        }
        if (d.accepting[q]) m.accepting[block[q]] = true;
    }
    for (std::uint32_t a = 0; a < k; ++a) {
        std::vector<StateId> img(blocks);
        for (std::uint32_t b = 0; b < blocks; ++b) img[b] = block[d.delta[a][rep[b]]];
        m.delta.emplace_back(std::move(img));
    }
    return canonicalize(m);
}

bool is_minimal(const Dfa& dfa) { return minimize(dfa).num_states == dfa.num_states; }

StateId quotient_complexity(const Dfa& dfa) { return minimize(dfa).num_states; }

std::vector<StateId> quotient_complexities(const Dfa& dfa) {
    if (!is_minimal(dfa))
        throw std::invalid_argument("quotient_complexities: DFA is not minimal");
    std::vector<StateId> out(dfa.num_states);
    for (StateId q = 0; q < dfa.num_states; ++q) {
        Dfa from_q = dfa;
        from_q.initial = q;
        out[q] = quotient_complexity(from_q);
    }
    return out;
}

Dfa remap_alphabet(const Dfa& dfa, const Alphabet& target) {
    if (!dfa.alphabet.same_set(target))
        throw std::invalid_argument("remap_alphabet: alphabets differ as sets");
    Dfa out;
    out.alphabet = target;
    out.num_states = dfa.num_states;
    out.initial = dfa.initial;
    out.accepting = dfa.accepting;
    for (std::uint32_t a = 0; a < target.size(); ++a)
        out.delta.push_back(dfa.delta[*dfa.alphabet.index(target.name(a))]);
    return out;
}

bool isomorphic(const Dfa& a, const Dfa& b) {
    if (!a.alphabet.same_set(b.alphabet))
        throw std::invalid_argument("isomorphic: alphabets differ as sets");
    std::vector<std::string> names = a.alphabet.letters();
    std::sort(names.begin(), names.end());
    Alphabet sorted{names};
    Dfa ca = canonicalize(remap_alphabet(a, sorted));
    Dfa cb = canonicalize(remap_alphabet(b, sorted));
    return ca.num_states == cb.num_states && ca.accepting == cb.accepting && ca.delta == cb.delta;
}

bool language_equal(const Dfa& a, const Dfa& b) {
    a.validate();
    b.validate();
    if (!a.alphabet.same_set(b.alphabet))
        throw std::invalid_argument("language_equal: alphabets differ as sets");
    Dfa b2 = remap_alphabet(b, a.alphabet);

    std::unordered_set<std::uint64_t> seen;
    std::deque<std::pair<StateId, StateId>> queue;
    auto key = [](StateId p, StateId q) { return (std::uint64_t(p) << 32) | q; };
    queue.emplace_back(a.initial, b2.initial);
    seen.insert(key(a.initial, b2.initial));
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        if (a.accepting[p] != b2.accepting[q]) return false;
        for (std::uint32_t l = 0; l < a.alphabet.size(); ++l) {
            StateId np = a.delta[l][p], nq = b2.delta[l][q];
            if (seen.insert(key(np, nq)).second) queue.emplace_back(np, nq);
        }
    }
    return true;
}

Dfa empty_language_dfa(const Alphabet& alphabet) {
    Dfa d;
    d.alphabet = alphabet;
    d.num_states = 1;
    d.initial = 0;
    d.accepting = {false};
    for (std::uint32_t a = 0; a < alphabet.size(); ++a)
        d.delta.push_back(Transformation(std::vector<StateId>{0}));
    return d;
}

Dfa sigma_star_dfa(const Alphabet& alphabet) {
    Dfa d = empty_language_dfa(alphabet);
    d.accepting = {true};
    return d;
}

std::vector<bool> coreachable_states(const Dfa& dfa) {
    std::vector<std::vector<StateId>> pred(dfa.num_states);
    for (std::uint32_t a = 0; a < dfa.alphabet.size(); ++a)
        for (StateId q = 0; q < dfa.num_states; ++q)
            pred[dfa.delta[a][q]].push_back(q);
    std::vector<bool> co(dfa.num_states, false);
    std::deque<StateId> queue;
    for (StateId q = 0; q < dfa.num_states; ++q)
        if (dfa.accepting[q]) {
            co[q] = true;
            queue.push_back(q);
        }
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        for (StateId p : pred[q])
            if (!co[p]) {
                co[p] = true;
                queue.push_back(p);
            }
    }
    return co;
}

std::optional<StateId> find_empty_state(const Dfa& dfa) {
    std::vector<bool> co = coreachable_states(dfa);
    for (StateId q = 0; q < dfa.num_states; ++q)
        if (!co[q]) return q;
    return std::nullopt;
}

std::optional<Word> shortest_accepted(const Dfa& dfa) {
    std::vector<std::int64_t> from(dfa.num_states, -1);
    std::vector<std::uint32_t> via(dfa.num_states, 0);
    std::vector<bool> seen(dfa.num_states, false);
    std::deque<StateId> queue;
    seen[dfa.initial] = true;
    queue.push_back(dfa.initial);
    StateId hit = dfa.num_states;
    if (dfa.accepting[dfa.initial]) hit = dfa.initial;
    while (!queue.empty() && hit == dfa.num_states) {
        StateId q = queue.front();
        queue.pop_front();
        for (std::uint32_t a = 0; a < dfa.alphabet.size() && hit == dfa.num_states; ++a) {
            StateId to = dfa.delta[a][q];
            if (!seen[to]) {
                seen[to] = true;
                from[to] = q;
                via[to] = a;
                if (dfa.accepting[to]) hit = to;
                queue.push_back(to);
            }
        }
    }
    if (hit == dfa.num_states) return std::nullopt;
    Word w;
    for (StateId q = hit; from[q] >= 0; q = static_cast<StateId>(from[q]))
        w.push_back(via[q]);
    std::reverse(w.begin(), w.end());
    return w;
}

} // namespace aclab
