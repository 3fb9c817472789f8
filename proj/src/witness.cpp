#include "aclab/witness.hpp"

#include <stdexcept>

#include "aclab/transform.hpp"

namespace aclab {

namespace {

const std::pair<const char*, WitnessClass> kNames[] = {
    {"regular4", WitnessClass::Regular4},
    {"regular3", WitnessClass::Regular3},
    {"right_ideal", WitnessClass::RightIdeal},
    {"prefix_closed", WitnessClass::PrefixClosed},
    {"prefix_free", WitnessClass::PrefixFree},
    {"proper_prefix_convex", WitnessClass::ProperPrefixConvex},
    {"left_ideal", WitnessClass::LeftIdeal},
    {"suffix_closed", WitnessClass::SuffixClosed},
    {"suffix_free_semigroup", WitnessClass::SuffixFreeSemigroup},
    {"suffix_free_ops", WitnessClass::SuffixFreeOps},
    {"bifix_free_ops", WitnessClass::BifixFreeOps},
    {"two_sided_ideal", WitnessClass::TwoSidedIdeal},
    {"non_returning", WitnessClass::NonReturning},
};

Dfa assemble(std::vector<std::string> letters, StateId n,
             std::vector<TransformSpec> specs, StateId initial,
             std::vector<StateId> finals) {
    Dfa d;
    d.alphabet = Alphabet{std::move(letters)};
    d.num_states = n;
    d.initial = initial;
    d.accepting.assign(n, false);
    for (StateId f : finals) d.accepting[f] = true;
    for (const TransformSpec& s : specs) d.delta.push_back(compile(s, n));
    d.validate();
    return d;
}

std::vector<StateId> range(StateId lo, StateId hi) { // inclusive
    std::vector<StateId> v;
    for (StateId q = lo; q <= hi; ++q) v.push_back(q);
    return v;
}

Dfa proper_prefix_convex_witness(StateId n, StateId k) {
    // E = {0..n-2-k}, F = {n-1-k..n-2}, empty state n-1; letters a and b act
    // with complementary parities on the two parts
    const StateId e_hi = n - 2 - k;       // last state of E
    const StateId f_lo = n - 1 - k;       // first final
    const bool e_even = (n - 1 - k) % 2 == 0;
    const bool k_even = k % 2 == 0;

    TransformSpec a;
    if (k >= 2)
        a.cycle(range(e_even ? 1 : 0, e_hi)).cycle({f_lo, static_cast<StateId>(n - k)});
    else
        a.cycle(range(e_even ? 1 : 0, e_hi));

    TransformSpec b;
    if (n - 1 - k >= 2)
        b.cycle(range(k_even ? static_cast<StateId>(n - k) : f_lo, n - 2)).cycle({0, 1});
    else
        b.cycle(range(k_even ? static_cast<StateId>(n - k) : f_lo, n - 2));

    TransformSpec c1;
    if (n - 1 - k >= 2) c1.send(1, 0);
    TransformSpec c2;
    if (k >= 2) c2.send(n - k, f_lo);
    TransformSpec d1;
    d1.send(e_hi, n - 1);
    if (static_cast<std::int64_t>(e_hi) - 1 >= 0) d1.shift_up(0, e_hi - 1);
    TransformSpec d2;
    d2.shift_up(f_lo, n - 2);
    TransformSpec e;
    e.send(0, f_lo);

    return assemble({"a", "b", "c1", "c2", "d1", "d2", "e"}, n, {a, b, c1, c2, d1, d2, e}, 0,
                    range(f_lo, n - 2));
}

Dfa non_returning_witness(StateId n) {
    // named letters cover types {0,n-1}, {0,1}, {1,n-1}, {0,2}; the rest of
    // Gamma takes one canonical rank-(n-1) transformation per type {i,j}
    // that maps no state to 0
    std::vector<std::string> letters = {"a", "b", "c", "d"};
    std::vector<TransformSpec> specs(4);
    specs[0].cycle(range(1, n - 1)).send(0, 1);                  // type {0, n-1}
    specs[1].cycle({1, 2}).send(0, 2);                           // type {0, 1}
    specs[2].cycle(range(2, n - 1)).send(1, 2).send(0, 1);       // type {1, n-1}
    specs[3].send(0, 2);                                         // type {0, 2}

    for (StateId i = 0; i + 1 < n; ++i) {
        for (StateId j = i + 1; j < n; ++j) {
            bool named = (i == 0 && j == n - 1) || (i == 0 && j == 1) ||
                         (i == 1 && j == n - 1) || (i == 0 && j == 2);
            if (named) continue;
            TransformSpec t;
            if (i == 0) {
                t.send(0, j); // 0 and j collide on j
            } else {
                t.send(j, i).send(0, j);
            }
            letters.push_back("a_" + std::to_string(i) + "_" + std::to_string(j));
            specs.push_back(t);
        }
    }
    return assemble(std::move(letters), n, std::move(specs), 0, {n - 1});
}

} // namespace

std::optional<WitnessClass> witness_class_from_name(const std::string& name) {
    for (const auto& [s, c] : kNames)
        if (name == s) return c;
    return std::nullopt;
}

std::string witness_class_name(WitnessClass c) {
    for (const auto& [s, cc] : kNames)
        if (cc == c) return s;
    return "?";
}

std::vector<WitnessClass> all_witness_classes() {
    std::vector<WitnessClass> v;
    for (const auto& [s, c] : kNames) {
        (void)s;
        v.push_back(c);
    }
    return v;
}

StateId witness_min_n(WitnessClass c) {
    switch (c) {
    case WitnessClass::Regular4:
    case WitnessClass::Regular3:
    case WitnessClass::ProperPrefixConvex:
        return 3;
    case WitnessClass::BifixFreeOps:
        return 7;
    case WitnessClass::TwoSidedIdeal:
        return 5;
    default:
        return 4;
    }
}

bool witness_takes_k(WitnessClass c) { return c == WitnessClass::ProperPrefixConvex; }

Dfa make_witness(WitnessClass c, StateId n, std::optional<StateId> k) {
    if (n < witness_min_n(c))
        throw std::invalid_argument("make_witness: n below the class minimum " +
                                    std::to_string(witness_min_n(c)));
    if (witness_takes_k(c)) {
        if (!k || *k < 1 || *k > n - 2)
            throw std::invalid_argument("make_witness: k required with 1 <= k <= n-2");
    } else if (k) {
        throw std::invalid_argument("make_witness: k applies to proper_prefix_convex only");
    }

    switch (c) {
    case WitnessClass::Regular4: {
        TransformSpec a, b, cc, d;
        a.cycle(range(0, n - 1));
        b.cycle({0, 1});
        cc.send(n - 1, 0);
        return assemble({"a", "b", "c", "d"}, n, {a, b, cc, d}, 0, {n - 1});
    }
    case WitnessClass::Regular3: {
        TransformSpec a, b, cc;
        a.cycle(range(0, n - 1));
        b.cycle({0, 1});
        cc.send(1, 0);
        return assemble({"a", "b", "c"}, n, {a, b, cc}, 0, {n - 1});
    }
    case WitnessClass::RightIdeal: {
        TransformSpec a, b, cc, d;
        a.cycle(range(0, n - 2));
        b.cycle({0, 1});
        cc.send(1, 0);
        d.shift_up(0, n - 2);
        return assemble({"a", "b", "c", "d"}, n, {a, b, cc, d}, 0, {n - 1});
    }
    case WitnessClass::PrefixClosed: {
        TransformSpec a, b, cc, d;
        a.cycle(range(0, n - 2));
        b.cycle({0, 1});
        cc.send(1, 0);
        d.shift_down(0, n - 2, /*mod=*/true);
        return assemble({"a", "b", "c", "d"}, n, {a, b, cc, d}, 0, range(0, n - 2));
    }
    case WitnessClass::PrefixFree: {
        std::vector<std::string> letters = {"a", "b", "c", "d"};
        std::vector<TransformSpec> specs(4);
        specs[0].send(n - 2, n - 1).cycle(range(0, n - 3));
        specs[1].send(n - 2, n - 1).cycle({0, 1});
        specs[2].send(n - 2, n - 1).send(1, 0);
        specs[3].send(0, n - 2).collapse(range(1, n - 1), n - 1);
        for (StateId q = 0; q <= n - 3; ++q) {
            TransformSpec e;
            e.send(n - 2, n - 1).send(q, n - 2);
            letters.push_back("e" + std::to_string(q));
            specs.push_back(e);
        }
        return assemble(std::move(letters), n, std::move(specs), 0, {n - 2});
    }
    case WitnessClass::ProperPrefixConvex:
        return proper_prefix_convex_witness(n, *k);
    case WitnessClass::LeftIdeal:
    case WitnessClass::SuffixClosed: {
        TransformSpec a, b, cc, d, e;
        a.cycle(range(1, n - 1));
        b.cycle({1, 2});
        cc.send(n - 1, 1);
        d.send(n - 1, 0);
        e.collapse(range(0, n - 1), 1);
        std::vector<StateId> finals =
            c == WitnessClass::LeftIdeal ? std::vector<StateId>{n - 1} : std::vector<StateId>{0};
        return assemble({"a", "b", "c", "d", "e"}, n, {a, b, cc, d, e}, 0, finals);
    }
    case WitnessClass::SuffixFreeSemigroup: {
        TransformSpec a, b, cc, d, e;
        a.send(0, n - 1).cycle(range(1, n - 2));
        b.send(0, n - 1).cycle({1, 2});
        cc.send(0, n - 1).send(n - 2, 1);
        d.collapse({0, 1}, n - 1);
        e.collapse(range(1, n - 1), n - 1).send(0, 1);
        std::vector<StateId> finals;
        for (StateId q = 1; q < n - 1; ++q)
            if (q % 2 == 1) finals.push_back(q);
        if (n == 4) // a and b coincide; four letters suffice
            return assemble({"b", "c", "d", "e"}, n, {b, cc, d, e}, 0, finals);
        return assemble({"a", "b", "c", "d", "e"}, n, {a, b, cc, d, e}, 0, finals);
    }
    case WitnessClass::SuffixFreeOps: {
        TransformSpec a, b, cc;
        a.send(0, n - 1).cycle(range(1, n - 2));
        b.send(0, n - 1).cycle({1, 2});
        cc.cycle({1, n - 1}).send(0, 1);
        return assemble({"a", "b", "c"}, n, {a, b, cc}, 0, {n - 2});
    }
    case WitnessClass::BifixFreeOps: {
        const StateId h = (n - 1) / 2;
        TransformSpec a, b, cc;
        a.send(0, 1).collapse(range(1, n - 3), n - 2).collapse({n - 2, n - 1}, n - 1);
        b.collapse({0, n - 2, n - 1}, n - 1).cycle(range(1, n - 3));
        std::vector<StateId> cyc;
        for (StateId q = n - 3; q >= h + 1; --q) cyc.push_back(q);
        for (StateId q = h - 1; q >= 2; --q) cyc.push_back(q);
        cc.collapse({0, n - 2, n - 1}, n - 1).send(1, h).send(h, n - 2).cycle(cyc);
        return assemble({"a", "b", "c"}, n, {a, b, cc}, 0, {n - 2});
    }
    case WitnessClass::TwoSidedIdeal: {
        TransformSpec a, b, cc, d, e, f;
        a.cycle(range(1, n - 2));
        b.cycle({1, 2});
        cc.send(n - 2, 1);
        d.send(n - 2, 0);
        e.collapse(range(0, n - 2), 1);
        f.send(1, n - 1);
        return assemble({"a", "b", "c", "d", "e", "f"}, n, {a, b, cc, d, e, f}, 0, {n - 1});
    }
    case WitnessClass::NonReturning:
        return non_returning_witness(n);
    }
    throw std::logic_error("make_witness: unhandled class");
}

Dialect Dialect::identity_for(const Alphabet& alphabet) {
    Dialect d;
    for (const std::string& l : alphabet.letters()) d.targets.emplace_back(l);
    return d;
}

Dialect Dialect::parse(const std::string& text) {
    Dialect d;
    std::string cur;
    auto push = [&] {
        while (!cur.empty() && cur.front() == ' ') cur.erase(cur.begin());
        while (!cur.empty() && cur.back() == ' ') cur.pop_back();
        if (cur == "-")
            d.targets.emplace_back(std::nullopt);
        else if (!cur.empty())
            d.targets.emplace_back(cur);
        else
            throw std::invalid_argument("dialect: empty target");
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',')
            push();
        else
            cur += ch;
    }
    push();
    return d;
}

std::string Dialect::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (i) out += ',';
        out += targets[i] ? *targets[i] : "-";
    }
    return out;
}

bool Dialect::is_identity_for(const Alphabet& alphabet) const {
    if (targets.size() != alphabet.size()) return false;
    for (std::size_t i = 0; i < targets.size(); ++i)
        if (!targets[i] || *targets[i] != alphabet.name(i)) return false;
    return true;
}

Dfa apply_dialect(const Dfa& dfa, const Dialect& dialect) {
    if (dialect.targets.size() > dfa.alphabet.size())
        throw std::invalid_argument("dialect: more targets than canonical letters");
    std::vector<std::string> letters;
    std::vector<Transformation> delta;
    for (std::size_t i = 0; i < dialect.targets.size(); ++i) {
        if (!dialect.targets[i]) continue;
        letters.push_back(*dialect.targets[i]);
        delta.push_back(dfa.delta[i]);
    }
    Dfa out;
    out.alphabet = Alphabet{letters}; // rejects duplicate targets
    out.num_states = dfa.num_states;
    out.initial = dfa.initial;
    out.accepting = dfa.accepting;
    out.delta = std::move(delta);
    out.validate();
    return out;
}

} // namespace aclab
