#include "aclab/ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace aclab {

bool BoolOp::depends_on_first() const {
    return value(false, false) != value(true, false) || value(false, true) != value(true, true);
}

bool BoolOp::depends_on_second() const {
    return value(false, false) != value(false, true) || value(true, false) != value(true, true);
}

BoolOp BoolOp::from_mask_string(const std::string& bits) {
    if (bits.size() != 4 || bits.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("boolean mask must be four bits, e.g. 0110");
    BoolOp op;
    // mask string lists values at (0,0),(0,1),(1,0),(1,1)
    for (int i = 0; i < 4; ++i)
        if (bits[i] == '1') op.mask |= static_cast<std::uint8_t>(1u << i);
    return op;
}

namespace {
const std::pair<const char*, std::uint8_t> kNamedOps[] = {
    {"union", 0b1110},
    {"intersection", 0b1000},
    {"difference", 0b0100},
    {"symmetric-difference", 0b0110},
    {"nand", 0b0111},
    {"nor", 0b0001},
    {"xnor", 0b1001},
    {"reverse-difference", 0b0010},
    {"implies", 0b1011},
    {"converse-implies", 0b1101},
};
} // namespace

std::optional<BoolOp> BoolOp::from_name(const std::string& name) {
    for (const auto& [n, m] : kNamedOps)
        if (name == n) return BoolOp{m};
    return std::nullopt;
}

std::string BoolOp::mask_string() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i)
        if (mask & (1u << i)) s[i] = '1';
    return s;
}

std::string BoolOp::name() const {
    for (const auto& [n, m] : kNamedOps)
        if (mask == m) return n;
    return mask_string();
}

std::vector<BoolOp> proper_boolean_ops() {
    std::vector<BoolOp> ops;
    for (std::uint8_t m = 0; m < 16; ++m) {
        BoolOp op{m};
        if (op.proper()) ops.push_back(op);
    }
    return ops;
}

Dfa reverse(const Dfa& dfa, std::uint64_t subset_limit) {
    return minimize(determinize(reverse_nfa(dfa), subset_limit));
}

Dfa star(const Dfa& dfa, std::uint64_t subset_limit) {
    dfa.validate();
    Nfa n;
    n.alphabet = dfa.alphabet;
    bool eps_in_l = dfa.accepting[dfa.initial];
    n.num_states = dfa.num_states + (eps_in_l ? 0 : 1);
    for (std::uint32_t a = 0; a < dfa.alphabet.size(); ++a)
        for (StateId q = 0; q < dfa.num_states; ++q)
            n.transitions.push_back({q, static_cast<std::int32_t>(a), dfa.delta[a][q]});
    for (StateId f : dfa.final_states())
        if (f != dfa.initial) n.transitions.push_back({f, kEpsilon, dfa.initial});
    n.finals = dfa.final_states();
    if (eps_in_l) {
        n.initials = {dfa.initial};
    } else {
        StateId fresh = dfa.num_states; // new accepting initial state
        n.transitions.push_back({fresh, kEpsilon, dfa.initial});
        n.initials = {fresh};
        n.finals.push_back(fresh);
    }
    return minimize(determinize(n, subset_limit));
}

std::pair<Dfa, Dfa> unify_alphabets(const Dfa& d1, const Dfa& d2) {
    std::vector<std::string> letters = d1.alphabet.letters();
    for (const std::string& l : d2.alphabet.letters())
        if (!d1.alphabet.has(l)) letters.push_back(l);
    Alphabet uni{letters};

    auto extend = [&uni](const Dfa& d) {
        if (d.alphabet.size() == uni.size()) return remap_alphabet(d, uni);
        std::optional<StateId> sink = find_empty_state(d);
        Dfa out;
        out.alphabet = uni;
        out.num_states = d.num_states + (sink ? 0 : 1);
        out.initial = d.initial;
        out.accepting = d.accepting;
        out.accepting.resize(out.num_states, false);
        StateId empty_state = sink ? *sink : d.num_states;
        for (std::uint32_t a = 0; a < uni.size(); ++a) {
            std::vector<StateId> img(out.num_states);
            auto idx = d.alphabet.index(uni.name(a));
            for (StateId q = 0; q < out.num_states; ++q) {
                if (q >= d.num_states)
                    img[q] = empty_state; // the added empty state is a sink
                else if (idx)
                    img[q] = d.delta[*idx][q];
                else
                    img[q] = empty_state;
            }
            out.delta.emplace_back(std::move(img));
        }
        return out;
    };
    return {extend(d1), extend(d2)};
}

Dfa product(const Dfa& d1, const Dfa& d2, OpMode mode, std::uint64_t subset_limit) {
    d1.validate();
    d2.validate();
    Dfa a = d1, b = d2;
    if (mode == OpMode::Restricted) {
        if (!d1.alphabet.same_set(d2.alphabet))
            throw std::invalid_argument("product: restricted mode needs equal alphabets");
        b = remap_alphabet(d2, d1.alphabet);
    } else {
        std::tie(a, b) = unify_alphabets(d1, d2);
    }

    // epsilon-NFA: finals of the first operand become non-final and gain an
    // epsilon-move to the second's initial state
    Nfa n;
    n.alphabet = a.alphabet;
    n.num_states = a.num_states + b.num_states;
    const StateId off = a.num_states;
    for (std::uint32_t l = 0; l < a.alphabet.size(); ++l) {
        for (StateId q = 0; q < a.num_states; ++q)
            n.transitions.push_back({q, static_cast<std::int32_t>(l), a.delta[l][q]});
        for (StateId q = 0; q < b.num_states; ++q)
            n.transitions.push_back({q + off, static_cast<std::int32_t>(l), b.delta[l][q] + off});
    }
    for (StateId f : a.final_states()) n.transitions.push_back({f, kEpsilon, b.initial + off});
    n.initials = {a.initial};
    for (StateId f : b.final_states()) n.finals.push_back(f + off);
    return minimize(determinize(n, subset_limit));
}

namespace {

Dfa drop_letters(const Dfa& d, const std::vector<std::string>& keep) {
    Alphabet target{keep};
    Dfa out;
    out.alphabet = target;
    out.num_states = d.num_states;
    out.initial = d.initial;
    out.accepting = d.accepting;
    for (const std::string& l : keep) out.delta.push_back(d.delta[*d.alphabet.index(l)]);
    return out;
}

} // namespace

Dfa boolean(const Dfa& d1, const Dfa& d2, BoolOp op, OpMode mode) {
    d1.validate();
    d2.validate();
    Dfa a = d1, b = d2;
    if (mode == OpMode::Restricted) {
        if (!d1.alphabet.same_set(d2.alphabet))
            throw std::invalid_argument("boolean: restricted mode needs equal alphabets");
        b = remap_alphabet(d2, d1.alphabet);
    } else {
        std::tie(a, b) = unify_alphabets(d1, d2);
    }

    Dfa prod;
    prod.alphabet = a.alphabet;
    prod.num_states = a.num_states * b.num_states;
    prod.initial = a.initial * b.num_states + b.initial;
    prod.accepting.resize(prod.num_states);
    for (StateId p = 0; p < a.num_states; ++p)
        for (StateId q = 0; q < b.num_states; ++q)
            prod.accepting[p * b.num_states + q] = op.value(a.accepting[p], b.accepting[q]);
    for (std::uint32_t l = 0; l < a.alphabet.size(); ++l) {
        std::vector<StateId> img(prod.num_states);
        for (StateId p = 0; p < a.num_states; ++p)
            for (StateId q = 0; q < b.num_states; ++q)
                img[p * b.num_states + q] = a.delta[l][p] * b.num_states + b.delta[l][q];
        prod.delta.emplace_back(std::move(img));
    }

    if (mode == OpMode::Unrestricted) {
        // the result alphabet keeps a letter private to one operand only if
        // some word over it can be accepted: op(1,0) or op(0,0) on the first
        // side, op(0,1) or op(0,0) on the second
        bool keep1 = op.value(true, false) || op.value(false, false);
        bool keep2 = op.value(false, true) || op.value(false, false);
        std::vector<std::string> keep;
        for (const std::string& l : prod.alphabet.letters()) {
            bool in1 = d1.alphabet.has(l), in2 = d2.alphabet.has(l);
            if ((in1 && in2) || (in1 && keep1) || (in2 && keep2)) keep.push_back(l);
        }
        if (keep.size() != prod.alphabet.size()) prod = drop_letters(prod, keep);
    }
    return minimize(prod);
}

Dfa complement(const Dfa& dfa) {
    dfa.validate();
    Dfa out = dfa;
    for (StateId q = 0; q < out.num_states; ++q) out.accepting[q] = !out.accepting[q];
    return out;
}

} // namespace aclab
