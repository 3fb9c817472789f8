#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "aclab/atoms.hpp"
#include "aclab/bounds.hpp"
#include "aclab/classify.hpp"
#include "aclab/json_io.hpp"
#include "aclab/ops.hpp"
#include "aclab/regex.hpp"
#include "aclab/semigroup.hpp"
#include "aclab/verify.hpp"
#include "aclab/witness.hpp"

using namespace aclab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

Dfa load_input(const std::string& path, const std::string& expr) {
    if (!expr.empty()) return derivative_dfa(parse_expr(expr));
    if (path.empty()) throw std::invalid_argument("an input file or --expr is required");
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)),
                         std::istreambuf_iterator<char>());
        return automaton_from_json(text);
    }
    return load_dfa_file(path);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open " + out_path);
        out << text << "\n";
    }
}

BoolOp parse_op(const std::string& name, const std::string& mask) {
    if (!mask.empty()) return BoolOp::from_mask_string(mask);
    if (auto op = BoolOp::from_name(name)) return *op;
    throw std::invalid_argument("unknown boolean operation " + name);
}

std::pair<long, long> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        long v = std::stol(text);
        return {v, v};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
}

int run_main(int argc, char** argv) {
    CLI::App app{"aclab: complexity measures of regular languages and their witnesses"};
    app.require_subcommand(1);

    // witness
    auto* witness_cmd = app.add_subcommand("witness", "emit a witness DFA as JSON");
    std::string w_class, w_dialect, w_out;
    long w_n = 0;
    long w_k = -1;
    witness_cmd->add_option("--class", w_class, "witness class")->required();
    witness_cmd->add_option("--n", w_n, "state count")->required();
    witness_cmd->add_option("--k", w_k, "k (proper_prefix_convex only)");
    witness_cmd->add_option("--dialect", w_dialect, "positional dialect, e.g. a,b,-,c");
    witness_cmd->add_option("-o,--output", w_out, "output file (default stdout)");

    // measure
    auto* measure_cmd = app.add_subcommand("measure", "measure complexity quantities");
    std::string m_file, m_expr, m_which;
    measure_cmd->add_option("file", m_file, "automaton JSON file or -");
    measure_cmd->add_option("--expr", m_expr, "regular expression input");
    measure_cmd->add_option("--which", m_which,
                            "comma list: kappa,quotients,semigroup,atoms,reverse,star,all");

    // op
    auto* op_cmd = app.add_subcommand("op", "apply an operation and emit the minimal DFA");
    std::string o_op, o_mask, o_mode = "restricted", o_out;
    std::vector<std::string> o_inputs;
    std::string o_expr;
    op_cmd->add_option("--op", o_op, "reverse|star|complement|product|<boolean name>")
        ->required();
    op_cmd->add_option("--op-mask", o_mask, "boolean op as 4 bits over (00,01,10,11)");
    op_cmd->add_option("--mode", o_mode, "restricted|unrestricted");
    op_cmd->add_option("inputs", o_inputs, "input automaton files");
    op_cmd->add_option("--expr", o_expr, "expression input (unary ops)");
    op_cmd->add_option("-o,--output", o_out, "output file");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "language-class report");
    std::string c_file, c_expr;
    bool c_explain = false;
    classify_cmd->add_option("file", c_file, "automaton JSON file or -");
    classify_cmd->add_option("--expr", c_expr, "regular expression input");
    classify_cmd->add_flag("--explain", c_explain, "add counterexample words");

    // atoms
    auto* atoms_cmd = app.add_subcommand("atoms", "atom report");
    std::string a_file, a_expr;
    atoms_cmd->add_option("file", a_file, "automaton JSON file or -");
    atoms_cmd->add_option("--expr", a_expr, "regular expression input");

    // semigroup
    auto* sg_cmd = app.add_subcommand("semigroup", "transition semigroup report");
    std::string s_file, s_expr;
    std::uint64_t s_limit = limits::semigroup_limit();
    sg_cmd->add_option("file", s_file, "automaton JSON file or -");
    sg_cmd->add_option("--expr", s_expr, "regular expression input");
    sg_cmd->add_option("--limit", s_limit, "element cap");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a closed-form bound");
    std::string b_class, b_measure, b_op = "union", b_s;
    long b_n = 0, b_m = -1, b_k = -1, b_j = -1;
    bool b_table = false, b_conjecture = false;
    bounds_cmd->add_option("--class", b_class, "bound class")->required();
    bounds_cmd->add_option("--measure", b_measure, "bound measure");
    bounds_cmd->add_option("--n", b_n, "n")->required();
    bounds_cmd->add_option("--m", b_m, "m (binary measures)");
    bounds_cmd->add_option("--k", b_k, "k");
    bounds_cmd->add_option("--j", b_j, "j (first proper operand)");
    bounds_cmd->add_option("--op", b_op, "boolean op for boolean measures");
    bounds_cmd->add_option("--S", b_s, "atom subset, e.g. 0,2");
    bounds_cmd->add_flag("--table", b_table, "emit all measures as JSON");
    bounds_cmd->add_flag("--conjecture", b_conjecture, "allow conjectured formulas");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify bounds against witnesses");
    std::string v_class, v_n = "", v_m = "", v_measures, v_format = "md";
    verify_cmd->add_option("--class", v_class, "verification class")->required();
    verify_cmd->add_option("--n", v_n, "n or range a..b")->required();
    verify_cmd->add_option("--m", v_m, "m or range a..b (defaults to --n)");
    verify_cmd->add_option("--measures", v_measures, "comma list of task measures");
    verify_cmd->add_option("--format", v_format, "md|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*witness_cmd) {
            auto cls = witness_class_from_name(w_class);
            if (!cls) throw std::invalid_argument("unknown witness class " + w_class);
            Dfa d = make_witness(*cls, static_cast<StateId>(w_n),
                                 w_k >= 0 ? std::optional<StateId>(static_cast<StateId>(w_k))
                                          : std::nullopt);
            if (!w_dialect.empty()) d = apply_dialect(d, Dialect::parse(w_dialect));
            emit(dfa_to_json(d), w_out);
            return kExitOk;
        }

        if (*measure_cmd) {
            Dfa d = load_input(m_file, m_expr);
            MeasureSelection sel;
            if (m_which.empty() || m_which == "all") {
                sel = MeasureSelection::all();
            } else {
                std::stringstream ss(m_which);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    if (item == "kappa") sel.kappa = true;
                    else if (item == "quotients") sel.quotients = true;
                    else if (item == "semigroup") sel.semigroup = true;
                    else if (item == "atoms") sel.atoms = true;
                    else if (item == "reverse") sel.reverse = true;
                    else if (item == "star") sel.star = true;
                    else throw std::invalid_argument("unknown measure " + item);
                }
            }
            Dfa m = minimize(d);
            emit(measure_report_json(measure(m, sel), m.num_states), "");
            return kExitOk;
        }

        if (*op_cmd) {
            OpMode mode = o_mode == "unrestricted" ? OpMode::Unrestricted : OpMode::Restricted;
            if (o_mode != "restricted" && o_mode != "unrestricted")
                throw std::invalid_argument("mode must be restricted or unrestricted");
            auto need = [&](std::size_t count) {
                std::vector<Dfa> inputs;
                if (!o_expr.empty()) inputs.push_back(derivative_dfa(parse_expr(o_expr)));
                for (const std::string& f : o_inputs) inputs.push_back(load_input(f, ""));
                if (inputs.size() != count)
                    throw std::invalid_argument("operation needs " + std::to_string(count) +
                                                " input(s)");
                return inputs;
            };
            Dfa result;
            if (o_op == "reverse") {
                result = reverse(need(1)[0]);
            } else if (o_op == "star") {
                result = star(need(1)[0]);
            } else if (o_op == "complement") {
                result = minimize(complement(minimize(need(1)[0])));
            } else if (o_op == "product") {
                auto in = need(2);
                result = product(in[0], in[1], mode);
            } else {
                BoolOp op = parse_op(o_op, o_mask);
                auto in = need(2);
                result = boolean(in[0], in[1], op, mode);
                if (!op.proper())
                    std::cerr << "note: operation " << op.name()
                              << " is improper (does not depend on both arguments)\n";
            }
            emit(dfa_to_json(result), o_out);
            return kExitOk;
        }

        if (*classify_cmd) {
            Dfa d = load_input(c_file, c_expr);
            ClassReport r = classify(d);
            std::string json = class_report_json(r);
            if (c_explain) {
                nlohmann::json j = nlohmann::json::parse(json);
                if (!r.prefix_convex)
                    if (auto ce = explain_not_prefix_convex(d))
                        j["prefix_convex_counterexample"] = {
                            {"u", ce->u}, {"v", ce->v}, {"w", ce->w}};
                if (!r.prefix_free)
                    if (auto ce = explain_not_prefix_free(d))
                        j["prefix_free_counterexample"] = {
                            {"u", ce->u}, {"v", ce->v}, {"w", ce->w}};
                json = j.dump(2);
            }
            emit(json, "");
            return kExitOk;
        }

        if (*atoms_cmd) {
            Dfa m = minimize(load_input(a_file, a_expr));
            emit(atom_report_json(atom_report(m), m.num_states), "");
            return kExitOk;
        }

        if (*sg_cmd) {
            Dfa m = minimize(load_input(s_file, s_expr));
            emit(semigroup_report_json(semigroup_report(m, s_limit)), "");
            return kExitOk;
        }

        if (*bounds_cmd) {
            auto cls = bounds::class_from_name(b_class);
            if (!cls) throw std::invalid_argument("unknown bound class " + b_class);
            if (b_table) {
                nlohmann::json rows = nlohmann::json::array();
                for (bounds::BoundMeasure m : bounds::measures_for(*cls)) {
                    bounds::BoundQuery q;
                    q.cls = *cls;
                    q.measure = m;
                    q.n = b_n;
                    q.m = b_m >= 0 ? b_m : b_n;
                    q.k = b_k;
                    q.j = b_j >= 0 ? b_j : b_k;
                    q.op = parse_op(b_op, "");
                    q.allow_conjecture = b_conjecture;
                    try {
                        rows.push_back({{"measure", bounds::measure_name(m)},
                                        {"value", bounds::bound(q).get_str()}});
                    } catch (const std::invalid_argument&) {
                    }
                }
                emit(nlohmann::json{{"class", b_class}, {"n", b_n}, {"rows", rows}}.dump(2), "");
                return kExitOk;
            }
            if (!b_s.empty()) {
                std::uint64_t S = 0;
                std::stringstream ss(b_s);
                std::string item;
                while (std::getline(ss, item, ',')) S |= 1ull << std::stoul(item);
                emit(bounds::atom_bound(*cls, b_n, b_k, S).get_str(), "");
                return kExitOk;
            }
            auto measure = bounds::measure_from_name(b_measure);
            if (!measure) throw std::invalid_argument("unknown measure " + b_measure);
            bounds::BoundQuery q;
            q.cls = *cls;
            q.measure = *measure;
            q.n = b_n;
            q.m = b_m >= 0 ? b_m : b_n;
            q.k = b_k;
            q.j = b_j >= 0 ? b_j : b_k;
            q.op = parse_op(b_op, "");
            q.allow_conjecture = b_conjecture;
            emit(bounds::bound(q).get_str(), "");
            return kExitOk;
        }

        if (*verify_cmd) {
            auto [n_lo, n_hi] = parse_range(v_n);
            auto [m_lo, m_hi] = v_m.empty() ? std::pair<long, long>{n_lo, n_hi}
                                            : parse_range(v_m);
            std::vector<verify::TaskMeasure> only;
            if (!v_measures.empty()) {
                std::stringstream ss(v_measures);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto m = verify::task_measure_from_name(item);
                    if (!m) throw std::invalid_argument("unknown task measure " + item);
                    only.push_back(*m);
                }
            }
            auto results = verify::run(v_class, n_lo, n_hi, m_lo, m_hi, only);
            emit(v_format == "json" ? verify::report_json(results)
                                    : verify::report_markdown(results),
                 "");
            return verify::all_passed(results) ? kExitOk : kExitVerificationFailure;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) { return run_main(argc, argv); }
