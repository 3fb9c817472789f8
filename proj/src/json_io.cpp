#include "aclab/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace aclab {

using nlohmann::json;

std::string dfa_to_json(const Dfa& dfa, int indent) {
    json j;
    j["type"] = "dfa";
    j["states"] = dfa.num_states;
    j["alphabet"] = dfa.alphabet.letters();
    json delta = json::object();
    for (std::uint32_t a = 0; a < dfa.alphabet.size(); ++a)
        delta[dfa.alphabet.name(a)] = dfa.delta[a].images();
    j["delta"] = std::move(delta);
    j["initial"] = dfa.initial;
    j["finals"] = dfa.final_states();
    return j.dump(indent);
}

std::string nfa_to_json(const Nfa& nfa, int indent) {
    json j;
    j["type"] = "nfa";
    j["states"] = nfa.num_states;
    j["alphabet"] = nfa.alphabet.letters();
    json trans = json::array();
    for (const auto& t : nfa.transitions) {
        std::string letter = t.letter == kEpsilon ? "eps" : nfa.alphabet.name(t.letter);
        trans.push_back(json::array({t.from, letter, t.to}));
    }
    j["transitions"] = std::move(trans);
    j["initials"] = nfa.initials;
    j["finals"] = nfa.finals;
    return j.dump(indent);
}

static json parse(const std::string& text) {
    json j = json::parse(text, nullptr, true, true);
    if (!j.is_object()) throw std::invalid_argument("automaton json: object expected");
    return j;
}

Dfa dfa_from_json(const std::string& text) {
    json j = parse(text);
    Dfa d;
    d.num_states = j.at("states").get<StateId>();
    d.alphabet = Alphabet(j.at("alphabet").get<std::vector<std::string>>());
    d.initial = j.at("initial").get<StateId>();
    d.accepting.assign(d.num_states, false);
    for (StateId q : j.at("finals").get<std::vector<StateId>>()) {
        if (q >= d.num_states) throw std::invalid_argument("dfa json: final state out of range");
        d.accepting[q] = true;
    }
    const json& delta = j.at("delta");
    for (std::uint32_t a = 0; a < d.alphabet.size(); ++a) {
        const std::string& name = d.alphabet.name(a);
        if (!delta.contains(name))
            throw std::invalid_argument("dfa json: delta missing letter " + name);
        auto img = delta.at(name).get<std::vector<StateId>>();
        if (img.size() != d.num_states)
            throw std::invalid_argument("dfa json: delta row length mismatch for " + name);
        d.delta.emplace_back(std::move(img));
    }
    d.validate();
    return d;
}

Nfa nfa_from_json(const std::string& text) {
    json j = parse(text);
    Nfa n;
    n.num_states = j.at("states").get<StateId>();
    n.alphabet = Alphabet(j.at("alphabet").get<std::vector<std::string>>());
    n.initials = j.at("initials").get<std::vector<StateId>>();
    n.finals = j.at("finals").get<std::vector<StateId>>();
    for (const json& t : j.at("transitions")) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("nfa json: transition must be [p, letter, q]");
        NfaTransition tr;
        tr.from = t[0].get<StateId>();
        tr.to = t[2].get<StateId>();
        std::string letter = t[1].get<std::string>();
        if (letter == "eps") {
            tr.letter = kEpsilon;
        } else {
            auto idx = n.alphabet.index(letter);
            if (!idx) throw std::invalid_argument("nfa json: unknown letter " + letter);
            tr.letter = static_cast<std::int32_t>(*idx);
        }
        n.transitions.push_back(tr);
    }
    n.validate();
    return n;
}

Dfa automaton_from_json(const std::string& text) {
    json j = parse(text);
    std::string type = j.value("type", "dfa");
    if (type == "dfa") return dfa_from_json(text);
    if (type == "nfa") return determinize(nfa_from_json(text));
    throw std::invalid_argument("automaton json: unknown type " + type);
}

Dfa load_dfa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return automaton_from_json(text);
}

void save_dfa_file(const Dfa& dfa, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    out << dfa_to_json(dfa) << "\n";
}

} // namespace aclab
