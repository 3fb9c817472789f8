#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aclab/atoms.hpp"
#include "aclab/bounds.hpp"
#include "aclab/ops.hpp"
#include "aclab/witness.hpp"

namespace aclab {

/// Aggregated measurements of one DFA (minimized first).
struct MeasureReport {
    StateId kappa = 0;
    std::vector<StateId> quotient_profile; // sorted ascending
    std::optional<std::uint64_t> semigroup_size;
    std::optional<std::uint64_t> atom_count;
    std::vector<std::pair<AtomId, StateId>> atom_complexities;
    std::optional<StateId> reverse_complexity;
    std::optional<StateId> star_complexity;
};

struct MeasureSelection {
    bool kappa = true;
    bool quotients = false;
    bool semigroup = false;
    bool atoms = false;
    bool reverse = false;
    bool star = false;
    static MeasureSelection all();
};

MeasureReport measure(const Dfa& dfa, const MeasureSelection& which);
std::string measure_report_json(const MeasureReport& r, StateId n);

namespace verify {

enum class TaskMeasure {
    Semigroup,
    QuotientProfile,
    Reversal,
    AtomCount,
    AtomComplexities,
    Star,
    Product,
    Boolean,
};

std::string task_measure_name(TaskMeasure m);
std::optional<TaskMeasure> task_measure_from_name(const std::string& name);

struct VerificationTask {
    std::string cls;
    TaskMeasure measure = TaskMeasure::Semigroup;
    OpMode mode = OpMode::Restricted;
    BoolOp op;
    long n = 0, m = -1, k = -1, j = -1;
    std::string dialect1, dialect2; // positional dialect strings; empty = identity
};

enum class Status { Pass, Fail, Skipped };

struct VerificationResult {
    VerificationTask task;
    std::string expected, measured;
    Status status = Status::Fail;
    std::string note;
    double runtime_ms = 0;
};

/// Names of the classes the harness can verify (witness-backed).
std::vector<std::string> verify_class_names();

/// Builds and runs every wired (measure, parameter) task for the class over
/// the given ranges. Resource-cap overruns become Skipped, never Fail.
std::vector<VerificationResult> run(const std::string& cls, long n_lo, long n_hi, long m_lo,
                                    long m_hi,
                                    const std::vector<TaskMeasure>& only = {});

bool all_passed(const std::vector<VerificationResult>& results);

std::string report_markdown(const std::vector<VerificationResult>& results);
std::string report_json(const std::vector<VerificationResult>& results);
std::vector<VerificationResult> parse_report_json(const std::string& text);

} // namespace verify
} // namespace aclab
