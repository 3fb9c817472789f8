#include "aclab/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace aclab {

TransitionSemigroup transition_semigroup(const Dfa& dfa, std::uint64_t limit, bool with_words) {
    dfa.validate();
    TransitionSemigroup sg;

    std::vector<Transformation> gens;
    for (std::uint32_t a = 0; a < dfa.alphabet.size(); ++a) {
        if (std::find(gens.begin(), gens.end(), dfa.delta[a]) == gens.end()) {
            gens.push_back(dfa.delta[a]);
            sg.generator_names.push_back(dfa.alphabet.name(a));
        }
    }

    std::unordered_map<Transformation, std::uint64_t, TransformationHash> id;
    std::deque<std::uint64_t> queue;
    auto add = [&](const Transformation& t, const std::string& word) -> bool {
        auto [it, fresh] = id.emplace(t, sg.elements.size());
        if (!fresh) return false;
        if (sg.elements.size() >= limit)
            throw budget_error("transition_semigroup: element limit exceeded (" +
                                   std::to_string(limit) + ")",
                               sg.elements.size());
        sg.elements.push_back(t);
        if (with_words) sg.witness_words.push_back(word);
        queue.push_back(sg.elements.size() - 1);
        return true;
    };

    for (std::size_t g = 0; g < gens.size(); ++g)
        add(gens[g], sg.generator_names[g]);

    while (!queue.empty()) {
        std::uint64_t i = queue.front();
        queue.pop_front();
        Transformation base = sg.elements[i]; // copy: elements may reallocate
        std::string word = with_words ? sg.witness_words[i] : std::string();
        for (std::size_t g = 0; g < gens.size(); ++g)
            add(compose(base, gens[g]), with_words ? word + sg.generator_names[g] : word);
    }

    sg.has_identity = id.contains(Transformation::identity(dfa.num_states));
    return sg;
}

std::uint64_t syntactic_complexity(const Dfa& dfa, std::uint64_t limit) {
    return transition_semigroup(minimize(dfa), limit).elements.size();
}

PermutationGroup permutation_subgroup(const TransitionSemigroup& sg, StateId n) {
    PermutationGroup g;
    g.degree = n;
    for (const Transformation& t : sg.elements)
        if (t.rank() == n) g.elements.push_back(t);
    return g;
}

bool is_set_transitive(const PermutationGroup& g, StateId n) {
    if (n <= 1) return true;
    if (g.elements.empty()) return false;
    for (StateId k = 1; k < n; ++k) {
        // orbit of {0..k-1}; for a group the orbit is the set of element images
        std::vector<std::uint64_t> orbit;
        for (const Transformation& t : g.elements) {
            std::uint64_t img = 0;
            for (StateId q = 0; q < k; ++q) img |= 1ull << t[q];
            orbit.push_back(img);
        }
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        // C(n,k) distinct k-subsets required
        std::uint64_t want = 1;
        for (StateId i = 0; i < k; ++i) want = want * (n - i) / (i + 1);
        if (orbit.size() != want) return false;
    }
    return true;
}

bool is_aperiodic(const TransitionSemigroup& sg) {
    for (const Transformation& t : sg.elements) {
        std::map<Transformation, std::uint64_t> seen;
        Transformation cur = t;
        std::uint64_t step = 1;
        seen.emplace(cur, step);
        for (;;) {
            Transformation next = compose(cur, t);
            if (next == cur) break; // t^{k+1} = t^k
            auto it = seen.find(next);
            if (it != seen.end()) return false; // cycle of length > 1
            ++step;
            seen.emplace(next, step);
            cur = std::move(next);
            if (step > sg.elements.size() + 1) return false;
        }
    }
    return true;
}

bool conjugate_bases(const Transformation& s, const Transformation& t,
                     const Transformation& s2, const Transformation& t2) {
    StateId n = s.degree();
    if (t.degree() != n || s2.degree() != n || t2.degree() != n)
        throw std::invalid_argument("conjugate_bases: degree mismatch");
    if (!s.is_permutation() || !t.is_permutation() || !s2.is_permutation() ||
        !t2.is_permutation())
        throw std::invalid_argument("conjugate_bases: all inputs must be permutations");
    if (n > limits::kMaxConjugacyDegree)
        throw std::invalid_argument("conjugate_bases: degree too large for exhaustive search");
    if (s.cycle_type() != s2.cycle_type() || t.cycle_type() != t2.cycle_type()) return false;

    std::vector<StateId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Transformation r{std::vector<StateId>(perm)};
        if (conjugate(r, s) == s2 && conjugate(r, t) == t2) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<std::pair<StateId, StateId>>
perm_reachable_states(const Dfa& d1, const Dfa& d2, std::uint64_t limit) {
    if (!d1.alphabet.same_set(d2.alphabet))
        throw std::invalid_argument("perm_reachable_states: alphabets differ as sets");
    Dfa b = remap_alphabet(d2, d1.alphabet);

    using Pair = std::pair<Transformation, Transformation>;
    struct PairHash {
        std::size_t operator()(const Pair& p) const {
            TransformationHash h;
            return h(p.first) * 1099511628211ull ^ h(p.second);
        }
    };

    std::vector<Pair> gens;
    for (std::uint32_t a = 0; a < d1.alphabet.size(); ++a) {
        Pair g{d1.delta[a], b.delta[a]};
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }

    std::unordered_map<Pair, std::uint64_t, PairHash> id;
    std::vector<Pair> elements;
    std::deque<std::uint64_t> queue;
    auto add = [&](Pair p) {
        auto [it, fresh] = id.emplace(p, elements.size());
        if (!fresh) return;
        if (elements.size() >= limit)
            throw budget_error("perm_reachable_states: element limit exceeded", elements.size());
        elements.push_back(std::move(p));
        queue.push_back(elements.size() - 1);
    };
    for (const Pair& g : gens) add(g);
    while (!queue.empty()) {
        std::uint64_t i = queue.front();
        queue.pop_front();
        Pair base = elements[i];
        for (const Pair& g : gens)
            add({compose(base.first, g.first), compose(base.second, g.second)});
    }

    std::vector<std::pair<StateId, StateId>> out;
    out.emplace_back(d1.initial, b.initial); // the empty word induces the identity
    for (const Pair& p : elements)
        if (p.first.is_permutation() && p.second.is_permutation())
            out.emplace_back(p.first[d1.initial], p.second[b.initial]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SemigroupReport semigroup_report(const Dfa& dfa, std::uint64_t limit) {
    TransitionSemigroup sg = transition_semigroup(dfa, limit);
    SemigroupReport r;
    r.size = sg.elements.size();
    r.has_identity = sg.has_identity;
    r.perm_subgroup_size = permutation_subgroup(sg, dfa.num_states).elements.size();
    r.aperiodic = is_aperiodic(sg);
    return r;
}

std::string semigroup_report_json(const SemigroupReport& r) {
    nlohmann::json j;
    j["size"] = r.size;
    j["has_identity"] = r.has_identity;
    j["perm_subgroup_size"] = r.perm_subgroup_size;
    j["aperiodic"] = r.aperiodic;
    return j.dump(2);
}

} // namespace aclab
