#include "aclab/classify.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include <json.hpp>

#include "aclab/ops.hpp"
#include "aclab/semigroup.hpp"

namespace aclab {

namespace {

bool lang_empty(const Dfa& d) { return !shortest_accepted(d).has_value(); }

/// subset test A within B over a shared alphabet
bool lang_subset(const Dfa& a, const Dfa& b) {
    return lang_empty(boolean(a, b, BoolOp::difference(), OpMode::Restricted));
}

Dfa cat(const Dfa& a, const Dfa& b) { return product(a, b, OpMode::Restricted); }

/// reachable-state bitmap
std::vector<bool> reachable_states(const Dfa& d) {
    std::vector<bool> seen(d.num_states, false);
    std::deque<StateId> queue{d.initial};
    seen[d.initial] = true;
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        for (std::uint32_t a = 0; a < d.alphabet.size(); ++a)
            if (!seen[d.delta[a][q]]) {
                seen[d.delta[a][q]] = true;
                queue.push_back(d.delta[a][q]);
            }
    }
    return seen;
}

} // namespace

bool is_right_ideal(const Dfa& d) {
    Dfa m = minimize(d);
    return language_equal(m, cat(m, sigma_star_dfa(m.alphabet)));
}

bool is_left_ideal(const Dfa& d) {
    Dfa m = minimize(d);
    return language_equal(m, cat(sigma_star_dfa(m.alphabet), m));
}

bool is_two_sided_ideal(const Dfa& d) {
    Dfa m = minimize(d);
    Dfa ss = sigma_star_dfa(m.alphabet);
    return language_equal(m, cat(cat(ss, m), ss));
}

Dfa shuffle_closure_dfa(const Dfa& d) {
    Dfa m = minimize(d);
    Nfa n = to_nfa(m);
    for (std::uint32_t a = 0; a < m.alphabet.size(); ++a)
        for (StateId q = 0; q < m.num_states; ++q)
            n.transitions.push_back({q, static_cast<std::int32_t>(a), q});
    return minimize(determinize(n));
}

bool is_all_sided_ideal(const Dfa& d) {
    Dfa m = minimize(d);
    return language_equal(m, shuffle_closure_dfa(m));
}

bool is_prefix_free(const Dfa& d) {
    Dfa m = minimize(d);
    // no final state may reach a final state by a non-empty word
    std::vector<bool> seen(m.num_states, false);
    std::deque<StateId> queue;
    for (StateId f : m.final_states())
        for (std::uint32_t a = 0; a < m.alphabet.size(); ++a) {
            StateId to = m.delta[a][f];
            if (!seen[to]) {
                seen[to] = true;
                queue.push_back(to);
            }
        }
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        if (m.accepting[q]) return false;
        for (std::uint32_t a = 0; a < m.alphabet.size(); ++a) {
            StateId to = m.delta[a][q];
            if (!seen[to]) {
                seen[to] = true;
                queue.push_back(to);
            }
        }
    }
    return true;
}

bool is_suffix_free(const Dfa& d) { return is_prefix_free(reverse(d)); }

namespace {

/// Sigma^+ L Sigma^*  (pad = which sides get a mandatory/optional pad)
Nfa padded_nfa(const Dfa& d, bool plus_before, bool plus_after) {
    // state layout: 0 = pre, [1..n] = D shifted by 1, n+1 = post
    Nfa n;
    n.alphabet = d.alphabet;
    n.num_states = d.num_states + 2;
    const StateId pre = 0, post = d.num_states + 1;
    for (std::uint32_t a = 0; a < d.alphabet.size(); ++a) {
        n.transitions.push_back({pre, static_cast<std::int32_t>(a), pre});
        n.transitions.push_back({pre, static_cast<std::int32_t>(a),
                                 static_cast<StateId>(d.initial + 1)});
        for (StateId q = 0; q < d.num_states; ++q)
            n.transitions.push_back({static_cast<StateId>(q + 1), static_cast<std::int32_t>(a),
                                     static_cast<StateId>(d.delta[a][q] + 1)});
        for (StateId f : d.final_states())
            n.transitions.push_back({static_cast<StateId>(f + 1),
                                     static_cast<std::int32_t>(a), post});
        n.transitions.push_back({post, static_cast<std::int32_t>(a), post});
    }
    n.initials = {pre};
    if (!plus_before) n.initials.push_back(d.initial + 1);
    if (plus_after) {
        n.finals = {post};
    } else {
        for (StateId f : d.final_states()) n.finals.push_back(f + 1);
        n.finals.push_back(post);
    }
    return n;
}

/// emptiness of L(dfa) intersect L(nfa); both over the same alphabet order
bool intersect_empty(const Dfa& dfa, const Nfa& nfa) {
    std::vector<std::vector<StateId>> eps(nfa.num_states);
    std::vector<std::vector<std::vector<StateId>>> moves(
        nfa.alphabet.size(), std::vector<std::vector<StateId>>(nfa.num_states));
    for (const auto& t : nfa.transitions) {
        if (t.letter == kEpsilon)
            eps[t.from].push_back(t.to);
        else
            moves[t.letter][t.from].push_back(t.to);
    }
    std::vector<bool> nfinal(nfa.num_states, false);
    for (StateId f : nfa.finals) nfinal[f] = true;

    auto key = [](StateId p, StateId q) { return (std::uint64_t(p) << 32) | q; };
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::pair<StateId, StateId>> queue;
    auto push = [&](StateId p, StateId q) {
        if (seen.insert(key(p, q)).second) {
            queue.emplace_back(p, q);
            // epsilon moves advance only the NFA side
            for (StateId to : eps[q])
                if (seen.insert(key(p, to)).second) queue.emplace_back(p, to);
        }
    };
    for (StateId i : nfa.initials) push(dfa.initial, i);
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        for (StateId to : eps[q]) push(p, to);
        if (dfa.accepting[p] && nfinal[q]) return false;
        for (std::uint32_t a = 0; a < dfa.alphabet.size(); ++a)
            for (StateId to : moves[a][q]) push(dfa.delta[a][p], to);
    }
    return true;
}

Nfa supersequence_nfa(const Dfa& d, bool proper) {
    // insertion self-loops; a flag bit records that at least one letter was
    // inserted when properness is required
    Nfa n;
    n.alphabet = d.alphabet;
    n.num_states = proper ? 2 * d.num_states : d.num_states;
    auto idx = [&](StateId q, bool flag) {
        return proper && flag ? q + d.num_states : q;
    };
    for (std::uint32_t a = 0; a < d.alphabet.size(); ++a)
        for (StateId q = 0; q < d.num_states; ++q) {
            n.transitions.push_back({idx(q, false), static_cast<std::int32_t>(a),
                                     idx(d.delta[a][q], false)});
            n.transitions.push_back({idx(q, false), static_cast<std::int32_t>(a), idx(q, true)});
            if (proper) {
                n.transitions.push_back({idx(q, true), static_cast<std::int32_t>(a),
                                         idx(d.delta[a][q], true)});
                n.transitions.push_back({idx(q, true), static_cast<std::int32_t>(a), idx(q, true)});
            }
        }
    n.initials = {idx(d.initial, false)};
    for (StateId f : d.final_states()) n.finals.push_back(idx(f, proper));
    return n;
}

} // namespace

bool is_factor_free(const Dfa& d) {
    Dfa m = minimize(d);
    return intersect_empty(m, padded_nfa(m, true, false)) &&
           intersect_empty(m, padded_nfa(m, false, true));
}

bool is_subword_free(const Dfa& d) {
    Dfa m = minimize(d);
    return intersect_empty(m, supersequence_nfa(m, /*proper=*/true));
}

bool is_prefix_closed(const Dfa& d) { return is_right_ideal(complement(minimize(d))); }
bool is_suffix_closed(const Dfa& d) { return is_left_ideal(complement(minimize(d))); }
bool is_factor_closed(const Dfa& d) { return is_two_sided_ideal(complement(minimize(d))); }
bool is_subword_closed(const Dfa& d) { return is_all_sided_ideal(complement(minimize(d))); }

Dfa prefixes_dfa(const Dfa& d) {
    Dfa m = minimize(d);
    std::vector<bool> co = coreachable_states(m);
    Dfa p = m;
    for (StateId q = 0; q < p.num_states; ++q) p.accepting[q] = co[q];
    return minimize(p);
}

Dfa suffixes_dfa(const Dfa& d) {
    Dfa m = minimize(d);
    Nfa n = to_nfa(m);
    n.initials.clear();
    std::vector<bool> reach = reachable_states(m);
    for (StateId q = 0; q < m.num_states; ++q)
        if (reach[q]) n.initials.push_back(q);
    return minimize(determinize(n));
}

Dfa factors_dfa(const Dfa& d) {
    Dfa m = minimize(d);
    Nfa n = to_nfa(m);
    n.initials.clear();
    n.finals.clear();
    std::vector<bool> reach = reachable_states(m);
    std::vector<bool> co = coreachable_states(m);
    for (StateId q = 0; q < m.num_states; ++q) {
        if (reach[q]) n.initials.push_back(q);
        if (co[q]) n.finals.push_back(q);
    }
    return minimize(determinize(n));
}

Dfa subwords_dfa(const Dfa& d) {
    Dfa m = minimize(d);
    // reach(q): states reachable from q by any word (reflexive-transitive)
    std::vector<std::vector<bool>> reach(m.num_states,
                                         std::vector<bool>(m.num_states, false));
    for (StateId q = 0; q < m.num_states; ++q) {
        std::deque<StateId> queue{q};
        reach[q][q] = true;
        while (!queue.empty()) {
            StateId p = queue.front();
            queue.pop_front();
            for (std::uint32_t a = 0; a < m.alphabet.size(); ++a)
                if (!reach[q][m.delta[a][p]]) {
                    reach[q][m.delta[a][p]] = true;
                    queue.push_back(m.delta[a][p]);
                }
        }
    }
    Nfa n;
    n.alphabet = m.alphabet;
    n.num_states = m.num_states;
    for (StateId q = 0; q < m.num_states; ++q)
        for (StateId p = 0; p < m.num_states; ++p)
            if (reach[q][p])
                for (std::uint32_t a = 0; a < m.alphabet.size(); ++a)
                    n.transitions.push_back({q, static_cast<std::int32_t>(a), m.delta[a][p]});
    std::sort(n.transitions.begin(), n.transitions.end());
    n.transitions.erase(std::unique(n.transitions.begin(), n.transitions.end()),
                        n.transitions.end());
    n.initials = {m.initial};
    std::vector<bool> co = coreachable_states(m);
    for (StateId q = 0; q < m.num_states; ++q)
        if (co[q]) n.finals.push_back(q);
    return minimize(determinize(n));
}

bool is_prefix_convex(const Dfa& d) {
    Dfa m = minimize(d);
    Dfa between = boolean(cat(m, sigma_star_dfa(m.alphabet)), prefixes_dfa(m),
                          BoolOp::intersection(), OpMode::Restricted);
    return lang_subset(between, m);
}

bool is_suffix_convex(const Dfa& d) {
    Dfa m = minimize(d);
    Dfa between = boolean(cat(sigma_star_dfa(m.alphabet), m), suffixes_dfa(m),
                          BoolOp::intersection(), OpMode::Restricted);
    return lang_subset(between, m);
}

bool is_factor_convex(const Dfa& d) {
    Dfa m = minimize(d);
    Dfa ss = sigma_star_dfa(m.alphabet);
    Dfa between = boolean(cat(cat(ss, m), ss), factors_dfa(m), BoolOp::intersection(),
                          OpMode::Restricted);
    return lang_subset(between, m);
}

bool is_subword_convex(const Dfa& d) {
    Dfa m = minimize(d);
    Dfa between = boolean(shuffle_closure_dfa(m), subwords_dfa(m), BoolOp::intersection(),
                          OpMode::Restricted);
    return lang_subset(between, m);
}

bool is_proper_prefix_convex(const Dfa& d) {
    return is_prefix_convex(d) && !is_right_ideal(d) && !is_prefix_closed(d) &&
           !is_prefix_free(d);
}
bool is_proper_suffix_convex(const Dfa& d) {
    return is_suffix_convex(d) && !is_left_ideal(d) && !is_suffix_closed(d) &&
           !is_suffix_free(d);
}
bool is_proper_factor_convex(const Dfa& d) {
    return is_factor_convex(d) && !is_two_sided_ideal(d) && !is_factor_closed(d) &&
           !is_factor_free(d);
}
bool is_proper_subword_convex(const Dfa& d) {
    return is_subword_convex(d) && !is_all_sided_ideal(d) && !is_subword_closed(d) &&
           !is_subword_free(d);
}

bool is_non_returning(const Dfa& d) {
    Dfa m = minimize(d);
    for (std::uint32_t a = 0; a < m.alphabet.size(); ++a)
        for (StateId q = 0; q < m.num_states; ++q)
            if (m.delta[a][q] == m.initial) return false;
    return true;
}

bool is_bideterministic(const Dfa& d) {
    Dfa m = minimize(d);
    if (m.final_states().size() != 1) return false;
    for (std::uint32_t a = 0; a < m.alphabet.size(); ++a) {
        std::vector<int> indeg(m.num_states, 0);
        for (StateId q = 0; q < m.num_states; ++q)
            if (++indeg[m.delta[a][q]] > 1) return false;
    }
    return true;
}

bool is_star_free(const Dfa& d, std::uint64_t semigroup_limit) {
    return is_aperiodic(transition_semigroup(minimize(d), semigroup_limit));
}

ClassReport classify(const Dfa& d) {
    Dfa m = minimize(d);
    ClassReport r;
    r.right_ideal = is_right_ideal(m);
    r.left_ideal = is_left_ideal(m);
    r.two_sided_ideal = is_two_sided_ideal(m);
    r.all_sided_ideal = is_all_sided_ideal(m);
    r.prefix_free = is_prefix_free(m);
    r.suffix_free = is_suffix_free(m);
    r.factor_free = is_factor_free(m);
    r.subword_free = is_subword_free(m);
    r.prefix_closed = is_prefix_closed(m);
    r.suffix_closed = is_suffix_closed(m);
    r.factor_closed = is_factor_closed(m);
    r.subword_closed = is_subword_closed(m);
    r.prefix_convex = is_prefix_convex(m);
    r.suffix_convex = is_suffix_convex(m);
    r.factor_convex = is_factor_convex(m);
    r.subword_convex = is_subword_convex(m);
    r.proper_prefix_convex =
        r.prefix_convex && !r.right_ideal && !r.prefix_closed && !r.prefix_free;
    r.proper_suffix_convex =
        r.suffix_convex && !r.left_ideal && !r.suffix_closed && !r.suffix_free;
    r.proper_factor_convex =
        r.factor_convex && !r.two_sided_ideal && !r.factor_closed && !r.factor_free;
    r.proper_subword_convex =
        r.subword_convex && !r.all_sided_ideal && !r.subword_closed && !r.subword_free;
    r.non_returning = is_non_returning(m);
    r.bideterministic = is_bideterministic(m);
    r.star_free = is_star_free(m);
    return r;
}

std::string class_report_json(const ClassReport& r) {
    nlohmann::json j;
    j["right_ideal"] = r.right_ideal;
    j["left_ideal"] = r.left_ideal;
    j["two_sided_ideal"] = r.two_sided_ideal;
    j["all_sided_ideal"] = r.all_sided_ideal;
    j["prefix_free"] = r.prefix_free;
    j["suffix_free"] = r.suffix_free;
    j["factor_free"] = r.factor_free;
    j["subword_free"] = r.subword_free;
    j["prefix_closed"] = r.prefix_closed;
    j["suffix_closed"] = r.suffix_closed;
    j["factor_closed"] = r.factor_closed;
    j["subword_closed"] = r.subword_closed;
    j["prefix_convex"] = r.prefix_convex;
    j["suffix_convex"] = r.suffix_convex;
    j["factor_convex"] = r.factor_convex;
    j["subword_convex"] = r.subword_convex;
    j["proper_prefix_convex"] = r.proper_prefix_convex;
    j["proper_suffix_convex"] = r.proper_suffix_convex;
    j["proper_factor_convex"] = r.proper_factor_convex;
    j["proper_subword_convex"] = r.proper_subword_convex;
    j["non_returning"] = r.non_returning;
    j["bideterministic"] = r.bideterministic;
    j["star_free"] = r.star_free;
    return j.dump(2);
}

namespace {

std::string render(const Dfa& d, const Word& w) {
    std::string out;
    bool single = true;
    for (const std::string& l : d.alphabet.letters())
        if (l.size() != 1) single = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single && i) out += ' ';
        out += d.alphabet.name(w[i]);
    }
    return out;
}

std::optional<Word> shortest_from(const Dfa& d, StateId start, bool nonempty) {
    Dfa copy = d;
    copy.initial = start;
    if (!nonempty) return shortest_accepted(copy);
    // force at least one letter
    Word best;
    bool found = false;
    for (std::uint32_t a = 0; a < d.alphabet.size(); ++a) {
        Dfa c2 = d;
        c2.initial = d.delta[a][start];
        if (auto tail = shortest_accepted(c2)) {
            Word w{a};
            w.insert(w.end(), tail->begin(), tail->end());
            if (!found || w.size() < best.size()) {
                best = w;
                found = true;
            }
        }
    }
    if (found) return best;
    return std::nullopt;
}

} // namespace

std::optional<ConvexityCounterexample> explain_not_prefix_convex(const Dfa& d) {
    Dfa m = minimize(d);
    Dfa bad = boolean(boolean(cat(m, sigma_star_dfa(m.alphabet)), prefixes_dfa(m),
                              BoolOp::intersection(), OpMode::Restricted),
                      m, BoolOp::difference(), OpMode::Restricted);
    auto v = shortest_accepted(bad);
    if (!v) return std::nullopt;
    ConvexityCounterexample ce;
    ce.v = render(m, *v);
    // u: shortest prefix of v in L
    StateId q = m.initial;
    Word u;
    for (std::uint32_t a : *v) {
        if (m.accepting[q]) break;
        u.push_back(a);
        q = m.delta[a][q];
    }
    ce.u = render(m, u);
    // w: v extended to a word of L
    Word w = *v;
    if (auto tail = shortest_from(m, m.run(m.initial, *v), false))
        w.insert(w.end(), tail->begin(), tail->end());
    ce.w = render(m, w);
    return ce;
}

std::optional<ConvexityCounterexample> explain_not_prefix_free(const Dfa& d) {
    Dfa m = minimize(d);
    for (StateId f : m.final_states()) {
        Dfa to_f = m;
        for (StateId q = 0; q < m.num_states; ++q) to_f.accepting[q] = q == f;
        auto u = shortest_accepted(to_f);
        if (!u) continue;
        if (auto ext = shortest_from(m, f, true)) {
            ConvexityCounterexample ce;
            ce.u = render(m, *u);
            Word v = *u;
            v.insert(v.end(), ext->begin(), ext->end());
            ce.v = render(m, v);
            ce.w = ce.v;
            return ce;
        }
    }
    return std::nullopt;
}

} // namespace aclab
