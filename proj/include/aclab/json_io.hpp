#pragma once

#include <string>

#include "aclab/automaton.hpp"

namespace aclab {

/// DFA interchange:
/// {"type":"dfa","states":5,"alphabet":["a","b"],
///  "delta":{"a":[1,2,3,4,0],"b":[1,0,2,3,4]},"initial":0,"finals":[4]}
/// NFA variant uses "initials" and "transitions":[[p,"a",q],...] with
/// "eps" permitted as a letter.
std::string dfa_to_json(const Dfa& dfa, int indent = 2);
std::string nfa_to_json(const Nfa& nfa, int indent = 2);

Dfa dfa_from_json(const std::string& text);
Nfa nfa_from_json(const std::string& text);

/// Dispatches on the "type" field; NFA inputs are determinized.
Dfa automaton_from_json(const std::string& text);

Dfa load_dfa_file(const std::string& path);
void save_dfa_file(const Dfa& dfa, const std::string& path);

} // namespace aclab
