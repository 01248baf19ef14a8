#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "pancyclic/graph.hpp"

namespace pancyclic {

enum class LengthStatus { Witnessed, Present, Absent, Unknown };
enum class Provenance { Constructive, Oracle, None };

std::string_view to_string(LengthStatus s);
std::string_view to_string(Provenance p);

struct LengthEntry {
    LengthStatus status = LengthStatus::Unknown;
    std::optional<CycleWitness> witness;
    // Operation that produced the status, e.g. "upper_range/zigzag_c1".
    std::string source;
    Provenance provenance = Provenance::None;
    // Free-form explanation, typically the failing inequality for unknowns.
    std::string note;
    // Set when an exhausted search contradicts the cycle-complete Ramsey bound.
    bool ramsey_contradiction = false;

    friend bool operator==(const LengthEntry&, const LengthEntry&) = default;
};

// One lemma invocation together with the inequality it checked.
struct StepRecord {
    std::string operation;
    std::string inequality;
    bool satisfied = false;
    std::string detail;

    friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

class SpectrumReport {
public:
    SpectrumReport() = default;
    explicit SpectrumReport(int n) : n_(n) {}

    int order() const noexcept { return n_; }
    const std::map<int, LengthEntry>& lengths() const noexcept { return lengths_; }
    const std::vector<StepRecord>& steps() const noexcept { return steps_; }

    const LengthEntry* find(int ell) const;
    LengthStatus status(int ell) const;

    void record_witness(const CycleWitness& c, std::string source, Provenance provenance);
    void record_present(int ell, std::string source, Provenance provenance);
    void record_absent(int ell, std::string source, bool ramsey_contradiction = false);
    void record_unknown(int ell, std::string source, std::string note);
    void add_step(StepRecord step) { steps_.push_back(std::move(step)); }
    void add_step(std::string operation, std::string inequality, bool satisfied, std::string detail = {});

    // Folds `other` in. Constructive witnesses beat oracle witnesses, which beat
    // bare presence, absence and unknown. A witness and an absence proof for the
    // same length raise Error(InternalContradiction).
    void merge(const SpectrumReport& other);

    std::set<int> present() const;
    std::set<int> absent() const;
    std::set<int> unknown() const;
    std::set<int> witnessed_by(Provenance p) const;

    friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;

private:
    void put(int ell, LengthEntry entry);

    int n_ = 0;
    std::map<int, LengthEntry> lengths_;
    std::vector<StepRecord> steps_;
};

// True iff every witnessed entry carries a cycle of exactly that length that
// validates against g.
bool validate_report(const Graph& g, const SpectrumReport& report);

// {"n":..,"lengths":{"<ell>":{"status":..,"witness":[..]?,"source":..,"provenance":..}},"steps":[..]}
nlohmann::json to_json(const SpectrumReport& report);
SpectrumReport report_from_json(const nlohmann::json& j);

// "length,status,provenance" rows for plotting.
std::string to_plot_csv(const SpectrumReport& report);

} // namespace pancyclic
