#include <doctest.h>

#include <random>

#include "aclab/atoms.hpp"
#include "aclab/bounds.hpp"
#include "aclab/ops.hpp"
#include "aclab/witness.hpp"
#include "testutil.hpp"

using namespace aclab;
using namespace aclab::test;

namespace {
Dfa regular_abc(StateId n) {
    return apply_dialect(make_witness(WitnessClass::Regular4, n), Dialect::parse("a,b,c"));
}
} // namespace

TEST_CASE("atoms of Sigma^{n-2}") {
    // quotients Sigma^2, Sigma, eps, empty; the classes are the word-length
    // levels plus all words of length >= 3, so the count matches kappa(L^R)
    Dfa d = sigma_power_dfa(2);
    auto atoms = atom_ids(d);
    auto [count, rev] = atom_count_equals_reverse(d);
    CHECK(count == rev);
    CHECK(count == 4);
    CHECK(std::find(atoms.begin(), atoms.end(), 0u) != atoms.end()); // words of length >= 3
}

TEST_CASE("atom counts of the regular witness") {
    CHECK(atom_ids(regular_abc(3)).size() == 8);
    auto [count, rev] = atom_count_equals_reverse(regular_abc(4));
    CHECK(count == 16);
    CHECK(rev == 16);
}

TEST_CASE("one-state automata") {
    Dfa all = sigma_star_dfa(ab());
    auto atoms = atom_ids(all);
    REQUIRE(atoms.size() == 1);
    CHECK(atoms[0] == 1); // S = {0}
    CHECK(atom_complexity(all, 1) == 1);
}

TEST_CASE("atom count equals reverse complexity on random minimal DFAs") {
    std::mt19937 rng(19);
    for (int i = 0; i < 300; ++i) {
        Dfa m = minimize(random_dfa(rng, 2 + rng() % 6, 2));
        auto [count, rev] = atom_count_equals_reverse(m);
        CHECK(count == rev);
    }
}

TEST_CASE("bideterministic languages have n atoms") {
    Dfa e = even_as();
    auto [count, rev] = atom_count_equals_reverse(e);
    CHECK(count == 2);
    CHECK(rev == 2);
}

TEST_CASE("atom complexities of the regular witness at n = 3") {
    Dfa d = regular_abc(3);
    // S = empty and S = Q_3 reach 2^n - 1
    CHECK(atom_complexity(d, 0b000) == 7);
    CHECK(atom_complexity(d, 0b111) == 7);
    // |S| = 1: the double sum gives 1 + C(3,1)(C(2,1) + C(2,2)) = 10
    CHECK(atom_complexity(d, 0b001) == 10);
    CHECK(atom_complexity(d, 0b010) == 10);
    CHECK(atom_complexity(d, 0b100) == 10);
    // brute-force cross-check of the formula values
    for (AtomId S : atom_ids(d))
        CHECK(atom_complexity(d, S) == bounds::regular_atom_bound(3, S));
}

TEST_CASE("atom complexity rejects non-atoms") {
    Dfa d = minimize(sigma_power_dfa(2));
    // S = {0,1}: a word cannot have length 2 and length 1 at once
    CHECK_FALSE(is_atom(d, 0b0011));
    CHECK_THROWS_AS(atom_complexity(d, 0b0011), std::invalid_argument);
}

TEST_CASE("every quotient is a union of atoms and atoms partition Sigma*") {
    std::mt19937 rng(29);
    auto words = all_words(2, 7);
    for (int i = 0; i < 20; ++i) {
        Dfa m = minimize(random_dfa(rng, 5, 2));
        auto atoms = atom_ids(m);
        std::vector<Dfa> atom_dfas;
        for (AtomId S : atoms) atom_dfas.push_back(atom_dfa(m, S));
        // word-level: each word lies in exactly one atom, the one keyed by
        // the set of states from which it is accepted
        for (const Word& w : words) {
            int members = 0;
            for (const Dfa& ad : atom_dfas) members += ad.accepts(w);
            CHECK(members == 1);
        }
        // quotient K_q = union of atoms with q in S
        for (StateId q = 0; q < m.num_states; ++q) {
            Dfa from_q = m;
            from_q.initial = q;
            for (const Word& w : words) {
                bool in_union = false;
                for (std::size_t ai = 0; ai < atoms.size(); ++ai)
                    if ((atoms[ai] >> q) & 1) in_union |= atom_dfas[ai].accepts(w);
                CHECK(from_q.accepts(w) == in_union);
            }
        }
    }
}

TEST_CASE("atom complexities never exceed the general bound") {
    std::mt19937 rng(31);
    for (int i = 0; i < 40; ++i) {
        Dfa m = minimize(random_dfa(rng, 5, 2));
        for (AtomId S : atom_ids(m))
            CHECK(atom_complexity(m, S) <= bounds::regular_atom_bound(m.num_states, S));
    }
}

TEST_CASE("atomaton: structure and theorem items on samples") {
    std::mt19937 rng(41);
    std::vector<Dfa> corpus{regular_abc(3), regular_abc(4), even_as(), contains_ab(),
                            minimize(sigma_power_dfa(2))};
    for (int i = 0; i < 30; ++i) corpus.push_back(minimize(random_dfa(rng, 5, 2)));

    for (const Dfa& m : corpus) {
        Atomaton at = atomaton(m);

        // item 1: the atomaton is D^{RDR}: its reverse is deterministic and
        // is exactly the canonical minimal DFA of L^R
        Nfa rev = at.nfa;
        std::swap(rev.initials, rev.finals);
        for (auto& t : rev.transitions) std::swap(t.from, t.to);
        REQUIRE(rev.initials.size() == 1);
        Dfa rev_dfa = determinize(rev);
        CHECK(rev_dfa.num_states == at.atoms.size()); // already deterministic
        Dfa lrev = minimize(determinize(reverse_nfa(m)));
        CHECK(isomorphic(minimize(rev_dfa), lrev));
        CHECK(minimize(rev_dfa).num_states == rev_dfa.num_states); // item 2: it is minimal

        // item 3: determinizing the atomaton gives D back
        CHECK(isomorphic(minimize(determinize(at.nfa)), m));
    }
}

TEST_CASE("atomaton item 4 on random NFAs") {
    std::mt19937 rng(43);
    for (int i = 0; i < 100; ++i) {
        Nfa n = random_nfa(rng, 5, 2);
        Dfa m = minimize(determinize(n));
        Atomaton at = atomaton(m);

        // N^{RDM} is the minimal DFA of L^R; the atomaton reversed and
        // canonicalized must coincide with it
        Nfa nr = n;
        std::swap(nr.initials, nr.finals);
        for (auto& t : nr.transitions) std::swap(t.from, t.to);
        Dfa nrdm = minimize(determinize(nr));

        Nfa ar = at.nfa;
        std::swap(ar.initials, ar.finals);
        for (auto& t : ar.transitions) std::swap(t.from, t.to);
        CHECK(isomorphic(minimize(determinize(ar)), nrdm));
        CHECK(determinize(ar).num_states == at.atoms.size());
    }
}

TEST_CASE("atomaton item 5: isomorphic to D iff bideterministic") {
    // (aa)* is bideterministic: the atomaton is the DFA itself
    Dfa e = even_as();
    Atomaton at = atomaton(e);
    REQUIRE(at.nfa.initials.size() == 1);
    CHECK(at.nfa.transitions.size() == e.num_states * e.alphabet.size());
    Dfa as_dfa = determinize(at.nfa);
    CHECK(as_dfa.num_states == e.num_states);
    CHECK(isomorphic(minimize(as_dfa), e));

    // the regular witness is not bideterministic: the atomaton must branch
    Dfa w = regular_abc(4);
    Atomaton aw = atomaton(w);
    CHECK(aw.atoms.size() > w.num_states);
}

TEST_CASE("atomicity classes") {
    AtomicityFlags f = atomicity_classes(regular_abc(4));
    CHECK(f.fts);
    CHECK(f.sts);
    CHECK(f.mal);
    CHECK(f.mna);
    CHECK(f.mcr);

    AtomicityFlags g = atomicity_classes(minimize(sigma_power_dfa(2)));
    CHECK_FALSE(g.fts);
    CHECK_FALSE(g.sts);
    CHECK_FALSE(g.mal);
    CHECK_FALSE(g.mna);
    CHECK_FALSE(g.mcr);
}

TEST_CASE("atomicity chain on exhaustive binary 3-state minimal DFAs") {
    for (std::uint32_t fmask = 1; fmask < 7; ++fmask) {
        for (std::uint32_t code = 0; code < 729; ++code) {
            std::uint32_t c = code;
            std::vector<StateId> ra(3), rb(3);
            for (int q = 0; q < 3; ++q) {
                ra[q] = c % 3;
                c /= 3;
            }
            for (int q = 0; q < 3; ++q) {
                rb[q] = c % 3;
                c /= 3;
            }
            Dfa d = dfa_of({"a", "b"}, {ra, rb}, {});
            for (int q = 0; q < 3; ++q) d.accepting[q] = (fmask >> q) & 1;
            if (minimize(d).num_states != 3) continue;
            AtomicityFlags f = atomicity_classes(d);
            CHECK((!f.fts || f.sts));
            CHECK(f.sts == f.mal);
            CHECK((!f.mal || f.mna));
            CHECK(f.mna == f.mcr);
        }
    }
}

TEST_CASE("atom report json shape") {
    Dfa d = regular_abc(3);
    AtomReport r = atom_report(d);
    CHECK(r.count == 8);
    CHECK(r.reverse_complexity == 8);
    std::string j = atom_report_json(r, d.num_states);
    CHECK(j.find("\"count\": 8") != std::string::npos);
    CHECK(j.find("\"reverse_complexity\": 8") != std::string::npos);
}
