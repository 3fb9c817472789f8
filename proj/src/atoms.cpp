#include "aclab/atoms.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "aclab/bounds.hpp"
#include "aclab/ops.hpp"
#include "aclab/semigroup.hpp"

namespace aclab {

namespace {

std::uint64_t image_mask(std::uint64_t set, const Transformation& t) {
    std::uint64_t out = 0;
    for (std::uint64_t rest = set; rest;) {
        StateId q = static_cast<StateId>(std::countr_zero(rest));
        rest &= rest - 1;
        out |= 1ull << t[q];
    }
    return out;
}

std::uint64_t finals_mask(const Dfa& d) {
    std::uint64_t f = 0;
    for (StateId q = 0; q < d.num_states; ++q)
        if (d.accepting[q]) f |= 1ull << q;
    return f;
}

struct PairKey {
    std::uint64_t x, y;
    friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
    std::size_t operator()(const PairKey& p) const {
        std::uint64_t h = p.x * 0x9e3779b97f4a7c15ull;
        h ^= p.y + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

void check_atom_caps(const Dfa& dfa) {
    if (dfa.num_states > limits::kMaxAtomStates)
        throw std::invalid_argument("atoms: state count exceeds the 2^n enumeration cap");
}

} // namespace

bool is_atom(const Dfa& dfa, AtomId S) {
    const std::uint64_t all = dfa.num_states >= 64 ? ~0ull : (1ull << dfa.num_states) - 1;
    if (S & ~all) throw std::invalid_argument("is_atom: S not a subset of Q_n");
    const std::uint64_t fin = finals_mask(dfa);
    PairKey init{S, all & ~S};

    std::unordered_set<PairKey, PairKeyHash> seen;
    std::deque<PairKey> queue;
    seen.insert(init);
    queue.push_back(init);
    while (!queue.empty()) {
        PairKey cur = queue.front();
        queue.pop_front();
        if ((cur.x & ~fin) == 0 && (cur.y & fin) == 0) return true;
        for (std::uint32_t a = 0; a < dfa.alphabet.size(); ++a) {
            PairKey next{image_mask(cur.x, dfa.delta[a]), image_mask(cur.y, dfa.delta[a])};
            if (next.x & next.y) continue; // unsatisfiable branch
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return false;
}

std::vector<AtomId> atom_ids(const Dfa& dfa) {
    dfa.validate();
    check_atom_caps(dfa);
    std::vector<AtomId> out;
    const std::uint64_t count = 1ull << dfa.num_states;
    for (std::uint64_t S = 0; S < count; ++S)
        if (is_atom(dfa, S)) out.push_back(S);
    return out;
}

std::pair<std::uint64_t, StateId> atom_count_equals_reverse(const Dfa& dfa) {
    return {atom_ids(dfa).size(), reverse(dfa).num_states};
}

Dfa atom_dfa(const Dfa& dfa, AtomId S, std::uint64_t pair_budget) {
    dfa.validate();
    if (dfa.num_states > limits::kMaxSubsetStates)
        throw std::invalid_argument("atom_dfa: more than 64 states");
    if (!is_atom(dfa, S)) throw std::invalid_argument("atom_dfa: S is not an atom");

    const std::uint64_t all = dfa.num_states >= 64 ? ~0ull : (1ull << dfa.num_states) - 1;
    const std::uint64_t fin = finals_mask(dfa);
    const std::uint32_t k = dfa.alphabet.size();

    constexpr StateId kDead = UINT32_MAX; // patched once the state count is known

    std::unordered_map<PairKey, StateId, PairKeyHash> id;
    std::vector<PairKey> states;
    std::deque<PairKey> queue;
    PairKey init{S, all & ~S};
    id.emplace(init, 0);
    states.push_back(init);
    queue.push_back(init);

    std::vector<std::vector<StateId>> delta(k);
    bool need_dead = false;

    while (!queue.empty()) {
        PairKey cur = queue.front();
        queue.pop_front();
        for (std::uint32_t a = 0; a < k; ++a) {
            PairKey next{image_mask(cur.x, dfa.delta[a]), image_mask(cur.y, dfa.delta[a])};
            if (next.x & next.y) {
                need_dead = true;
                delta[a].push_back(kDead);
                continue;
            }
            auto [it, fresh] = id.emplace(next, static_cast<StateId>(states.size()));
            if (fresh) {
                if (states.size() >= pair_budget)
                    throw budget_error("atom_dfa: pair-state budget exceeded", states.size());
                states.push_back(next);
                queue.push_back(next);
            }
            delta[a].push_back(it->second);
        }
    }

    const StateId dead = static_cast<StateId>(states.size());
    Dfa out;
    out.alphabet = dfa.alphabet;
    out.num_states = dead + (need_dead ? 1 : 0);
    out.initial = 0;
    out.accepting.resize(out.num_states, false);
    for (std::size_t i = 0; i < states.size(); ++i)
        out.accepting[i] = (states[i].x & ~fin) == 0 && (states[i].y & fin) == 0;
    for (std::uint32_t a = 0; a < k; ++a) {
        for (StateId& to : delta[a])
            if (to == kDead) to = dead;
        if (need_dead) delta[a].push_back(dead); // the sink loops to itself
        out.delta.emplace_back(std::move(delta[a]));
    }
    return minimize(out);
}

StateId atom_complexity(const Dfa& dfa, AtomId S, std::uint64_t pair_budget) {
    return atom_dfa(dfa, S, pair_budget).num_states;
}

Atomaton atomaton(const Dfa& dfa) {
    dfa.validate();
    check_atom_caps(dfa);
    Atomaton at;
    at.atoms = atom_ids(dfa);

    std::unordered_map<std::uint64_t, StateId> index;
    for (StateId i = 0; i < at.atoms.size(); ++i) index.emplace(at.atoms[i], i);

    auto preimage = [&dfa](std::uint64_t set, std::uint32_t a) {
        std::uint64_t out = 0;
        for (StateId q = 0; q < dfa.num_states; ++q)
            if (set & (1ull << dfa.delta[a][q])) out |= 1ull << q;
        return out;
    };

    Nfa& n = at.nfa;
    n.alphabet = dfa.alphabet;
    n.num_states = static_cast<StateId>(at.atoms.size());
    // A_j in alpha(A_i, a) iff a A_j is contained in A_i, and the S-set of
    // a A_j is exactly the preimage of S_j under a
    for (StateId j = 0; j < n.num_states; ++j) {
        for (std::uint32_t a = 0; a < dfa.alphabet.size(); ++a) {
            std::uint64_t si = preimage(at.atoms[j], a);
            auto it = index.find(si);
            if (it == index.end())
                throw std::logic_error("atomaton: preimage of an atom is not an atom");
            n.transitions.push_back({it->second, static_cast<std::int32_t>(a), j});
        }
    }
    for (StateId i = 0; i < n.num_states; ++i)
        if (at.atoms[i] & (1ull << dfa.initial)) n.initials.push_back(i);
    std::uint64_t fin = finals_mask(dfa);
    auto fit = index.find(fin);
    if (fit == index.end()) throw std::logic_error("atomaton: final atom missing");
    n.finals = {fit->second};
    return at;
}

AtomicityFlags atomicity_classes(const Dfa& dfa, std::uint64_t semigroup_limit) {
    dfa.validate();
    if (dfa.num_states < 3)
        throw std::invalid_argument("atomicity_classes: defined for n >= 3");
    const StateId n = dfa.num_states;
    AtomicityFlags f;

    TransitionSemigroup sg = transition_semigroup(dfa, semigroup_limit);
    std::uint64_t nn = 1;
    for (StateId i = 0; i < n; ++i) nn *= n;
    f.fts = sg.elements.size() == nn;

    bool rank_n1 = std::any_of(sg.elements.begin(), sg.elements.end(),
                               [n](const Transformation& t) { return t.rank() == n - 1; });
    f.sts = rank_n1 && is_set_transitive(permutation_subgroup(sg, n), n);

    std::vector<AtomId> atoms = atom_ids(dfa);
    f.mna = atoms.size() == (1ull << n);
    f.mcr = reverse(dfa).num_states == (1ull << n);

    f.mal = f.mna;
    if (f.mal)
        for (AtomId S : atoms)
            if (atom_complexity(dfa, S) != bounds::regular_atom_bound(n, S)) {
                f.mal = false;
                break;
            }
    return f;
}

AtomReport atom_report(const Dfa& dfa) {
    AtomReport r;
    for (AtomId S : atom_ids(dfa)) r.atoms.emplace_back(S, atom_complexity(dfa, S));
    r.count = r.atoms.size();
    r.reverse_complexity = reverse(dfa).num_states;
    return r;
}

std::string atom_report_json(const AtomReport& r, StateId n) {
    nlohmann::json j;
    j["atoms"] = nlohmann::json::array();
    for (const auto& [S, c] : r.atoms) {
        std::vector<StateId> members;
        for (StateId q = 0; q < n; ++q)
            if (S & (1ull << q)) members.push_back(q);
        j["atoms"].push_back({{"S", members}, {"complexity", c}});
    }
    j["count"] = r.count;
    j["reverse_complexity"] = r.reverse_complexity;
    return j.dump(2);
}

} // namespace aclab
