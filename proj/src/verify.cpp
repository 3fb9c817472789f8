#include "aclab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "aclab/semigroup.hpp"

namespace aclab {

MeasureSelection MeasureSelection::all() {
    MeasureSelection s;
    s.kappa = s.quotients = s.semigroup = s.atoms = s.reverse = s.star = true;
    return s;
}

MeasureReport measure(const Dfa& dfa, const MeasureSelection& which) {
    Dfa m = minimize(dfa);
    MeasureReport r;
    r.kappa = m.num_states;
    if (which.quotients) {
        auto p = quotient_complexities(m);
        r.quotient_profile.assign(p.begin(), p.end());
        std::sort(r.quotient_profile.begin(), r.quotient_profile.end());
    }
    if (which.semigroup) r.semigroup_size = transition_semigroup(m).elements.size();
    if (which.atoms) {
        for (AtomId S : atom_ids(m)) r.atom_complexities.emplace_back(S, atom_complexity(m, S));
        r.atom_count = r.atom_complexities.size();
    }
    if (which.reverse) r.reverse_complexity = reverse(m).num_states;
    if (which.star) r.star_complexity = star(m).num_states;
    return r;
}

std::string measure_report_json(const MeasureReport& r, StateId n) {
    nlohmann::json j;
    j["kappa"] = r.kappa;
    if (!r.quotient_profile.empty()) j["quotient_profile"] = r.quotient_profile;
    if (r.semigroup_size) j["semigroup"] = *r.semigroup_size;
    if (r.atom_count) {
        j["atoms"] = *r.atom_count;
        auto arr = nlohmann::json::array();
        for (const auto& [S, c] : r.atom_complexities) {
            std::vector<StateId> members;
            for (StateId q = 0; q < n; ++q)
                if (S & (1ull << q)) members.push_back(q);
            arr.push_back({{"S", members}, {"complexity", c}});
        }
        j["atom_complexities"] = std::move(arr);
    }
    if (r.reverse_complexity) j["reverse"] = *r.reverse_complexity;
    if (r.star_complexity) j["star"] = *r.star_complexity;
    return j.dump(2);
}

namespace verify {

using bounds::Big;
using bounds::BoundClass;
using bounds::BoundMeasure;
using bounds::BoundQuery;

namespace {

const std::pair<const char*, TaskMeasure> kTaskMeasureNames[] = {
    {"semigroup", TaskMeasure::Semigroup},
    {"quotient_profile", TaskMeasure::QuotientProfile},
    {"reversal", TaskMeasure::Reversal},
    {"atom_count", TaskMeasure::AtomCount},
    {"atom_complexities", TaskMeasure::AtomComplexities},
    {"star", TaskMeasure::Star},
    {"product", TaskMeasure::Product},
    {"boolean", TaskMeasure::Boolean},
};

struct BoolRow {
    std::vector<BoolOp> ops;
    OpMode mode;
    const char* d1;
    const char* d2;
};

/// Per-class wiring: which witness realizes each theorem item, with which
/// positional dialects. Dialect "" is the identity; "swap01" renames the
/// first two letters into each other and keeps the rest.
struct ClassWiring {
    std::string name;
    WitnessClass witness;     // semigroup / quotients / reversal / atoms / boolean
    WitnessClass ops_witness; // star / product
    BoundClass bcls;
    const char* semigroup_d = "";
    bool wire_quotients = false;
    const char* quotients_d = "";
    const char* reversal_d = "";
    bool wire_atom_count = false;
    const char* atoms_d = "";
    const char* star_d = "";
    std::optional<std::pair<const char*, const char*>> prod_r, prod_u;
    std::vector<BoolRow> bools;
};

std::vector<BoolOp> four_ops() {
    return {BoolOp::union_op(), BoolOp::symmetric_difference(), BoolOp::difference(),
            BoolOp::intersection()};
}

const std::vector<ClassWiring>& wirings() {
    static const std::vector<ClassWiring> table = [] {
        std::vector<ClassWiring> w;

        {
            ClassWiring r{"regular", WitnessClass::Regular4, WitnessClass::Regular4,
                          BoundClass::Regular};
            r.semigroup_d = "a,b,c";
            r.wire_quotients = true;
            r.quotients_d = "a";
            r.reversal_d = "a,b,c";
            r.wire_atom_count = true;
            r.atoms_d = "a,b,c";
            r.star_d = "a,b";
            r.prod_r = {{"a,b,c", "a,b,c"}};
            r.prod_u = {{"a,b,-,c", "b,a,-,d"}};
            r.bools.push_back({four_ops(), OpMode::Restricted, "a,b", "b,a"});
            r.bools.push_back({{BoolOp::union_op(), BoolOp::symmetric_difference()},
                               OpMode::Unrestricted,
                               "a,b,-,c",
                               "b,a,-,d"});
            r.bools.push_back({{BoolOp::difference()}, OpMode::Unrestricted, "a,b,-,c", "b,a"});
            r.bools.push_back({{BoolOp::intersection()}, OpMode::Unrestricted, "a,b", "b,a"});
            w.push_back(std::move(r));
        }
        {
            ClassWiring r{"regular3", WitnessClass::Regular3, WitnessClass::Regular3,
                          BoundClass::Regular};
            r.wire_quotients = true;
            r.quotients_d = "a";
            r.wire_atom_count = true;
            r.star_d = "a,b";
            r.prod_r = {{"a,b", "a,-,b"}};
            r.prod_u = {{"a,b", "a,c,b"}};
            r.bools.push_back({four_ops(), OpMode::Restricted, "a,b", "b,a"});
            r.bools.push_back({{BoolOp::union_op(), BoolOp::symmetric_difference()},
                               OpMode::Unrestricted,
                               "",
                               "b,a,d"});
            r.bools.push_back({{BoolOp::difference()}, OpMode::Unrestricted, "", "b,a"});
            r.bools.push_back({{BoolOp::intersection()}, OpMode::Unrestricted, "a,b", "b,a"});
            w.push_back(std::move(r));
        }
        {
            ClassWiring r{"right_ideal", WitnessClass::RightIdeal, WitnessClass::RightIdeal,
                          BoundClass::RightIdeal};
            r.prod_r = {{"", ""}};
            r.prod_u = {{"", "b,a,c,e"}};
            r.bools.push_back({four_ops(), OpMode::Restricted, "", "swap01"});
            w.push_back(std::move(r));
        }
        {
            ClassWiring r{"prefix_closed", WitnessClass::PrefixClosed, WitnessClass::PrefixClosed,
                          BoundClass::PrefixClosed};
            r.prod_r = {{"", ""}};
            r.bools.push_back({four_ops(), OpMode::Restricted, "", "swap01"});
            w.push_back(std::move(r));
        }
        {
            ClassWiring r{"prefix_free", WitnessClass::PrefixFree, WitnessClass::PrefixFree,
                          BoundClass::PrefixFree};
            r.wire_quotients = true;
            r.prod_r = {{"", ""}};
            r.bools.push_back({four_ops(), OpMode::Unrestricted, "", "swap01"});
            w.push_back(std::move(r));
        }
        {
            ClassWiring r{"proper_prefix_convex", WitnessClass::ProperPrefixConvex,
                          WitnessClass::ProperPrefixConvex, BoundClass::ProperPrefixConvex};
            r.wire_quotients = true;
            r.quotients_d = "a,b,-,-,-,d2,e";
            r.reversal_d = "a,b,-,-,-,d2,e";
            r.star_d = "a,b,-,-,d1,d2,e";
            r.prod_r = {{"a,b,c1,-,d1,d2,e", "a,d2,c1,-,d1,b,e"}};
            r.bools.push_back(
                {four_ops(), OpMode::Restricted, "a,b,c1,-,d1,d2,e", "a,b,e,-,d2,d1,c1"});
            w.push_back(std::move(r));
        }
        {
            ClassWiring r{"left_ideal", WitnessClass::LeftIdeal, WitnessClass::LeftIdeal,
                          BoundClass::LeftIdeal};
            r.prod_r = {{"", ""}};
            r.prod_u = {{"", "b,a,c,d,f"}};
            r.bools.push_back({four_ops(), OpMode::Restricted, "", "swap01"});
            w.push_back(std::move(r));
        }
        {
            ClassWiring r{"suffix_closed", WitnessClass::SuffixClosed, WitnessClass::SuffixClosed,
                          BoundClass::SuffixClosed};
            r.prod_r = {{"", ""}};
            r.prod_u = {{"", "b,a,c,d,f"}};
            w.push_back(std::move(r));
        }
        {
            ClassWiring r{"suffix_free", WitnessClass::SuffixFreeSemigroup,
                          WitnessClass::SuffixFreeOps, BoundClass::SuffixFree};
            r.wire_quotients = true;
            r.prod_r = {{"", ""}};
            r.bools.push_back({four_ops(), OpMode::Restricted, "", "swap01"});
            w.push_back(std::move(r));
        }
        {
            ClassWiring r{"bifix_free", WitnessClass::BifixFreeOps, WitnessClass::BifixFreeOps,
                          BoundClass::BifixFree};
            r.wire_quotients = true;
            r.prod_r = {{"", ""}};
            r.bools.push_back({four_ops(), OpMode::Restricted, "", "swap01"});
            w.push_back(std::move(r));
        }
        {
            ClassWiring r{"two_sided_ideal", WitnessClass::TwoSidedIdeal,
                          WitnessClass::TwoSidedIdeal, BoundClass::TwoSidedIdeal};
            r.prod_r = {{"", ""}};
            r.prod_u = {{"", "b,a,c,d,e,g"}};
            r.bools.push_back({four_ops(), OpMode::Restricted, "", "swap01"});
            w.push_back(std::move(r));
        }
        {
            ClassWiring r{"non_returning", WitnessClass::NonReturning, WitnessClass::NonReturning,
                          BoundClass::NonReturning};
            r.star_d = "a,b";
            r.prod_r = {{"a,b", "b,a"}};
            r.prod_u = {{"a,b,c", "b,a,d"}};
            r.bools.push_back({four_ops(), OpMode::Restricted, "a,b", "b,a"});
            r.bools.push_back({{BoolOp::union_op(), BoolOp::symmetric_difference()},
                               OpMode::Unrestricted,
                               "a,b,c",
                               "b,a,d"});
            r.bools.push_back({{BoolOp::difference()}, OpMode::Unrestricted, "a,b,c", "b,a"});
            r.bools.push_back({{BoolOp::intersection()}, OpMode::Unrestricted, "a,b", "b,a"});
            w.push_back(std::move(r));
        }
        return w;
    }();
    return table;
}

const ClassWiring& wiring_for(const std::string& cls) {
    for (const ClassWiring& w : wirings())
        if (w.name == cls) return w;
    throw std::invalid_argument("verify: unknown class " + cls);
}

Dialect resolve_dialect(const std::string& token, const Alphabet& alphabet) {
    if (token.empty() || token == "id") return Dialect::identity_for(alphabet);
    if (token == "swap01") {
        Dialect d = Dialect::identity_for(alphabet);
        if (d.targets.size() >= 2) std::swap(d.targets[0], d.targets[1]);
        return d;
    }
    return Dialect::parse(token);
}

Dfa build_operand(WitnessClass wc, long n, long k, const std::string& dialect_token) {
    Dfa w = witness_takes_k(wc) ? make_witness(wc, static_cast<StateId>(n),
                                               static_cast<StateId>(k))
                                : make_witness(wc, static_cast<StateId>(n));
    return apply_dialect(w, resolve_dialect(dialect_token, w.alphabet));
}

std::string join_profile(const std::vector<long>& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

struct KRange {
    long k_lo = -1, k_hi = -1; // -1,-1 for classes without k
};

std::vector<std::pair<long, long>> nk_pairs(const ClassWiring& w, long lo, long hi) {
    std::vector<std::pair<long, long>> out;
    for (long n = lo; n <= hi; ++n) {
        if (witness_takes_k(w.witness)) {
            for (long k = 1; k <= n - 2; ++k) out.emplace_back(n, k);
        } else {
            out.emplace_back(n, -1);
        }
    }
    return out;
}

} // namespace

std::string task_measure_name(TaskMeasure m) {
    for (const auto& [s, mm] : kTaskMeasureNames)
        if (mm == m) return s;
    return "?";
}

std::optional<TaskMeasure> task_measure_from_name(const std::string& name) {
    for (const auto& [s, m] : kTaskMeasureNames)
        if (name == s) return m;
    return std::nullopt;
}

std::vector<std::string> verify_class_names() {
    std::vector<std::string> names;
    for (const ClassWiring& w : wirings()) names.push_back(w.name);
    return names;
}

namespace {

VerificationResult execute(const ClassWiring& w, VerificationTask task) {
    VerificationResult res;
    res.task = task;
    auto started = std::chrono::steady_clock::now();
    try {
        BoundQuery q;
        q.cls = w.bcls;
        q.measure = BoundMeasure::Semigroup;
        q.n = task.n;
        q.m = task.m;
        q.k = task.k;
        q.j = task.j;
        q.op = task.op;

        Big expected = 0;
        std::uint64_t measured = 0;
        bool numeric = true;

        switch (task.measure) {
        case TaskMeasure::Semigroup: {
            q.measure = BoundMeasure::Semigroup;
            expected = bounds::bound(q);
            measured = syntactic_complexity(build_operand(w.witness, task.n, task.k,
                                                          task.dialect1));
            break;
        }
        case TaskMeasure::Reversal: {
            q.measure = BoundMeasure::Reversal;
            expected = bounds::bound(q);
            measured = reverse(build_operand(w.witness, task.n, task.k, task.dialect1)).num_states;
            break;
        }
        case TaskMeasure::AtomCount: {
            q.measure = BoundMeasure::AtomCount;
            expected = bounds::bound(q);
            measured = atom_ids(minimize(build_operand(w.witness, task.n, task.k,
                                                       task.dialect1)))
                           .size();
            break;
        }
        case TaskMeasure::Star: {
            q.measure = BoundMeasure::Star;
            expected = bounds::bound(q);
            measured = star(build_operand(w.ops_witness, task.n, task.k, task.dialect1))
                           .num_states;
            break;
        }
        case TaskMeasure::Product: {
            q.measure = task.mode == OpMode::Restricted ? BoundMeasure::ProductRestricted
                                                        : BoundMeasure::ProductUnrestricted;
            expected = bounds::bound(q);
            Dfa a = build_operand(w.ops_witness, task.m, task.j, task.dialect1);
            Dfa b = build_operand(w.ops_witness, task.n, task.k, task.dialect2);
            measured = product(a, b, task.mode).num_states;
            break;
        }
        case TaskMeasure::Boolean: {
            q.measure = task.mode == OpMode::Restricted ? BoundMeasure::BooleanRestricted
                                                        : BoundMeasure::BooleanUnrestricted;
            expected = bounds::bound(q);
            Dfa a = build_operand(w.witness, task.m, task.j, task.dialect1);
            Dfa b = build_operand(w.witness, task.n, task.k, task.dialect2);
            measured = boolean(a, b, task.op, task.mode).num_states;
            break;
        }
        case TaskMeasure::QuotientProfile: {
            numeric = false;
            std::vector<long> want =
                bounds::expected_quotient_profile(w.bcls, task.n, task.k);
            Dfa d = build_operand(w.witness, task.n, task.k, task.dialect1);
            auto got = quotient_complexities(minimize(d));
            std::vector<long> got_l(got.begin(), got.end());
            std::sort(got_l.begin(), got_l.end());
            res.expected = join_profile(want);
            res.measured = join_profile(got_l);
            res.status = want == got_l ? Status::Pass : Status::Fail;
            break;
        }
        case TaskMeasure::AtomComplexities: {
            numeric = false;
            Dfa d = minimize(build_operand(w.witness, task.n, task.k, task.dialect1));
            auto atoms = atom_ids(d);
            std::size_t matching = 0;
            std::string first_bad;
            for (AtomId S : atoms) {
                Big want = bounds::atom_bound(w.bcls, task.n, task.k, S);
                StateId got = atom_complexity(d, S);
                if (want == static_cast<long>(got)) {
                    ++matching;
                } else if (first_bad.empty()) {
                    first_bad = "S=" + std::to_string(S) + " expected " + want.get_str() +
                                " got " + std::to_string(got);
                }
            }
            res.expected = std::to_string(atoms.size()) + " atoms at formula";
            res.measured = std::to_string(matching) + " matching";
            res.status = matching == atoms.size() ? Status::Pass : Status::Fail;
            res.note = first_bad;
            break;
        }
        }

        if (numeric) {
            res.expected = expected.get_str();
            res.measured = std::to_string(measured);
            res.status = (expected == static_cast<long>(measured)) ? Status::Pass : Status::Fail;
        }
    } catch (const budget_error& e) {
        res.status = Status::Skipped;
        res.note = std::string("budget: ") + e.what();
    }
    res.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return res;
}

} // namespace

std::vector<VerificationResult> run(const std::string& cls, long n_lo, long n_hi, long m_lo,
                                    long m_hi, const std::vector<TaskMeasure>& only) {
    const ClassWiring& w = wiring_for(cls);
    auto wanted = [&only](TaskMeasure m) {
        return only.empty() || std::find(only.begin(), only.end(), m) != only.end();
    };

    std::vector<VerificationTask> tasks;
    auto unary = [&](TaskMeasure m, const char* dialect) {
        for (auto [n, k] : nk_pairs(w, n_lo, n_hi)) {
            VerificationTask t;
            t.cls = cls;
            t.measure = m;
            t.n = n;
            t.k = k;
            t.dialect1 = dialect;
            tasks.push_back(std::move(t));
        }
    };

    if (wanted(TaskMeasure::Semigroup)) unary(TaskMeasure::Semigroup, w.semigroup_d);
    if (wanted(TaskMeasure::QuotientProfile) && w.wire_quotients)
        unary(TaskMeasure::QuotientProfile, w.quotients_d);
    if (wanted(TaskMeasure::Reversal)) unary(TaskMeasure::Reversal, w.reversal_d);
    if (wanted(TaskMeasure::AtomCount) && w.wire_atom_count)
        unary(TaskMeasure::AtomCount, w.atoms_d);
    if (wanted(TaskMeasure::AtomComplexities)) unary(TaskMeasure::AtomComplexities, w.atoms_d);
    if (wanted(TaskMeasure::Star)) unary(TaskMeasure::Star, w.star_d);

    auto binary_product = [&](OpMode mode, const std::pair<const char*, const char*>& dd) {
        for (auto [m, j] : nk_pairs(w, m_lo, m_hi))
            for (auto [n, k] : nk_pairs(w, n_lo, n_hi)) {
                VerificationTask t;
                t.cls = cls;
                t.measure = TaskMeasure::Product;
                t.mode = mode;
                t.m = m;
                t.j = j;
                t.n = n;
                t.k = k;
                t.dialect1 = dd.first;
                t.dialect2 = dd.second;
                tasks.push_back(std::move(t));
            }
    };
    if (wanted(TaskMeasure::Product)) {
        if (w.prod_r) binary_product(OpMode::Restricted, *w.prod_r);
        if (w.prod_u) binary_product(OpMode::Unrestricted, *w.prod_u);
    }
    if (wanted(TaskMeasure::Boolean)) {
        for (const BoolRow& row : w.bools)
            for (const BoolOp& op : row.ops)
                for (auto [m, j] : nk_pairs(w, m_lo, m_hi))
                    for (auto [n, k] : nk_pairs(w, n_lo, n_hi)) {
                        VerificationTask t;
                        t.cls = cls;
                        t.measure = TaskMeasure::Boolean;
                        t.mode = row.mode;
                        t.op = op;
                        t.m = m;
                        t.j = j;
                        t.n = n;
                        t.k = k;
                        t.dialect1 = row.d1;
                        t.dialect2 = row.d2;
                        tasks.push_back(std::move(t));
                    }
    }

    std::vector<VerificationResult> results;
    results.reserve(tasks.size());
    for (const VerificationTask& t : tasks) results.push_back(execute(w, t));
    return results;
}

bool all_passed(const std::vector<VerificationResult>& results) {
    return std::none_of(results.begin(), results.end(), [](const VerificationResult& r) {
        return r.status == Status::Fail;
    });
}

namespace {

nlohmann::json task_params(const VerificationTask& t) {
    nlohmann::json p;
    p["n"] = t.n;
    if (t.m >= 0) p["m"] = t.m;
    if (t.k >= 0) p["k"] = t.k;
    if (t.j >= 0) p["j"] = t.j;
    if (t.measure == TaskMeasure::Boolean) {
        p["op"] = t.op.name();
        p["mode"] = t.mode == OpMode::Restricted ? "restricted" : "unrestricted";
    }
    if (t.measure == TaskMeasure::Product)
        p["mode"] = t.mode == OpMode::Restricted ? "restricted" : "unrestricted";
    if (!t.dialect1.empty()) p["dialect1"] = t.dialect1;
    if (!t.dialect2.empty()) p["dialect2"] = t.dialect2;
    return p;
}

} // namespace

std::string report_markdown(const std::vector<VerificationResult>& results) {
    std::ostringstream out;
    out << "| class | measure | params | expected | measured | pass |\n";
    out << "|---|---|---|---|---|---|\n";
    for (const VerificationResult& r : results) {
        out << "| " << r.task.cls << " | " << task_measure_name(r.task.measure) << " | "
            << task_params(r.task).dump() << " | " << r.expected << " | " << r.measured << " | "
            << (r.status == Status::Pass ? "yes"
                : r.status == Status::Fail ? "NO"
                                           : "skipped: budget")
            << " |\n";
    }
    return out.str();
}

std::string report_json(const std::vector<VerificationResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const VerificationResult& r : results) {
        nlohmann::json e;
        e["class"] = r.task.cls;
        e["measure"] = task_measure_name(r.task.measure);
        e["params"] = task_params(r.task);
        e["expected"] = r.expected;
        e["measured"] = r.measured;
        if (r.status == Status::Skipped)
            e["skipped"] = r.note.empty() ? "budget" : r.note;
        else
            e["pass"] = r.status == Status::Pass;
        arr.push_back(std::move(e));
    }
    nlohmann::json top;
    top["results"] = std::move(arr);
    return top.dump(2);
}

std::vector<VerificationResult> parse_report_json(const std::string& text) {
    nlohmann::json top = nlohmann::json::parse(text);
    std::vector<VerificationResult> out;
    for (const nlohmann::json& e : top.at("results")) {
        VerificationResult r;
        r.task.cls = e.at("class").get<std::string>();
        r.task.measure = *task_measure_from_name(e.at("measure").get<std::string>());
        const nlohmann::json& p = e.at("params");
        r.task.n = p.at("n").get<long>();
        if (p.contains("m")) r.task.m = p.at("m").get<long>();
        if (p.contains("k")) r.task.k = p.at("k").get<long>();
        if (p.contains("j")) r.task.j = p.at("j").get<long>();
        if (p.contains("op")) {
            auto op = BoolOp::from_name(p.at("op").get<std::string>());
            r.task.op = op ? *op : BoolOp::from_mask_string(p.at("op").get<std::string>());
        }
        if (p.contains("mode"))
            r.task.mode = p.at("mode").get<std::string>() == "restricted" ? OpMode::Restricted
                                                                          : OpMode::Unrestricted;
        if (p.contains("dialect1")) r.task.dialect1 = p.at("dialect1").get<std::string>();
        if (p.contains("dialect2")) r.task.dialect2 = p.at("dialect2").get<std::string>();
        r.expected = e.at("expected").get<std::string>();
        r.measured = e.at("measured").get<std::string>();
        if (e.contains("skipped")) {
            r.status = Status::Skipped;
            r.note = e.at("skipped").get<std::string>();
        } else {
            r.status = e.at("pass").get<bool>() ? Status::Pass : Status::Fail;
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace verify
} // namespace aclab
