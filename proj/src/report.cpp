#include "pancyclic/report.hpp"

#include <sstream>

#include "pancyclic/error.hpp"

namespace pancyclic {

std::string_view to_string(LengthStatus s)
{
    switch (s) {
    case LengthStatus::Witnessed: return "witnessed";
    case LengthStatus::Present: return "present";
    case LengthStatus::Absent: return "absent";
    case LengthStatus::Unknown: return "unknown";
    }
    return "unknown";
}

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::Constructive: return "constructive";
    case Provenance::Oracle: return "oracle";
    case Provenance::None: return "none";
    }
    return "none";
}

namespace {

int rank(const LengthEntry& e)
{
    switch (e.status) {
    case LengthStatus::Witnessed: return e.provenance == Provenance::Constructive ? 4 : 3;
    case LengthStatus::Present: return 2;
    case LengthStatus::Absent: return 2;
    case LengthStatus::Unknown: return 0;
    }
    return 0;
}

bool positive(LengthStatus s) { return s == LengthStatus::Witnessed || s == LengthStatus::Present; }

LengthStatus parse_status(const std::string& s)
{
    if (s == "witnessed") return LengthStatus::Witnessed;
    if (s == "present") return LengthStatus::Present;
    if (s == "absent") return LengthStatus::Absent;
    if (s == "unknown") return LengthStatus::Unknown;
    throw Error(ErrorKind::Parse, "unknown status '" + s + "'");
}

Provenance parse_provenance(const std::string& s)
{
    if (s == "constructive") return Provenance::Constructive;
    if (s == "oracle") return Provenance::Oracle;
    if (s == "none") return Provenance::None;
    throw Error(ErrorKind::Parse, "unknown provenance '" + s + "'");
}

} // namespace

const LengthEntry* SpectrumReport::find(int ell) const
{
    auto it = lengths_.find(ell);
    return it == lengths_.end() ? nullptr : &it->second;
}

LengthStatus SpectrumReport::status(int ell) const
{
    const auto* e = find(ell);
    return e ? e->status : LengthStatus::Unknown;
}

void SpectrumReport::put(int ell, LengthEntry entry)
{
    auto it = lengths_.find(ell);
    if (it == lengths_.end()) {
        lengths_.emplace(ell, std::move(entry));
        return;
    }
    auto& cur = it->second;
    if ((positive(cur.status) && entry.status == LengthStatus::Absent)
        || (cur.status == LengthStatus::Absent && positive(entry.status)))
        throw Error(ErrorKind::InternalContradiction,
                    "length " + std::to_string(ell) + " both present (" + (positive(cur.status) ? cur.source : entry.source)
                        + ") and absent (" + (positive(cur.status) ? entry.source : cur.source) + ")");
    if (rank(entry) > rank(cur))
        cur = std::move(entry);
    else if (cur.status == LengthStatus::Unknown && entry.status == LengthStatus::Unknown && cur.note.empty())
        cur.note = entry.note;
}

void SpectrumReport::record_witness(const CycleWitness& c, std::string source, Provenance provenance)
{
    LengthEntry e;
    e.status = LengthStatus::Witnessed;
    e.witness = c;
    e.source = std::move(source);
    e.provenance = provenance;
    put(c.length(), std::move(e));
}

void SpectrumReport::record_present(int ell, std::string source, Provenance provenance)
{
    LengthEntry e;
    e.status = LengthStatus::Present;
    e.source = std::move(source);
    e.provenance = provenance;
    put(ell, std::move(e));
}

void SpectrumReport::record_absent(int ell, std::string source, bool ramsey_contradiction)
{
    LengthEntry e;
    e.status = LengthStatus::Absent;
    e.source = std::move(source);
    e.provenance = Provenance::Oracle;
    e.ramsey_contradiction = ramsey_contradiction;
    put(ell, std::move(e));
}

void SpectrumReport::record_unknown(int ell, std::string source, std::string note)
{
    LengthEntry e;
    e.source = std::move(source);
    e.note = std::move(note);
    put(ell, std::move(e));
}

void SpectrumReport::add_step(std::string operation, std::string inequality, bool satisfied, std::string detail)
{
    steps_.push_back(StepRecord{std::move(operation), std::move(inequality), satisfied, std::move(detail)});
}

void SpectrumReport::merge(const SpectrumReport& other)
{
    if (n_ == 0)
        n_ = other.n_;
    for (const auto& [ell, entry] : other.lengths_)
        put(ell, entry);
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
}

std::set<int> SpectrumReport::present() const
{
    std::set<int> out;
    for (const auto& [ell, e] : lengths_)
        if (positive(e.status))
            out.insert(ell);
    return out;
}

std::set<int> SpectrumReport::absent() const
{
    std::set<int> out;
    for (const auto& [ell, e] : lengths_)
        if (e.status == LengthStatus::Absent)
            out.insert(ell);
    return out;
}

std::set<int> SpectrumReport::unknown() const
{
    std::set<int> out;
    for (int ell = 3; ell <= n_; ++ell)
        if (status(ell) == LengthStatus::Unknown)
            out.insert(ell);
    return out;
}

std::set<int> SpectrumReport::witnessed_by(Provenance p) const
{
    std::set<int> out;
    for (const auto& [ell, e] : lengths_)
        if (e.status == LengthStatus::Witnessed && e.provenance == p)
            out.insert(ell);
    return out;
}

bool validate_report(const Graph& g, const SpectrumReport& report)
{
    for (const auto& [ell, e] : report.lengths()) {
        if (e.status != LengthStatus::Witnessed)
            continue;
        if (!e.witness || e.witness->length() != ell || !validate_cycle(g, *e.witness))
            return false;
    }
    return true;
}

nlohmann::json to_json(const SpectrumReport& report)
{
    nlohmann::json lengths = nlohmann::json::object();
    for (int ell = 3; ell <= report.order(); ++ell) {
        nlohmann::json item;
        const auto* e = report.find(ell);
        LengthEntry blank;
        const LengthEntry& entry = e ? *e : blank;
        item["status"] = std::string(to_string(entry.status));
        if (entry.witness)
            item["witness"] = entry.witness->vertices;
        item["source"] = entry.source;
        item["provenance"] = std::string(to_string(entry.provenance));
        if (!entry.note.empty())
            item["note"] = entry.note;
        if (entry.ramsey_contradiction)
            item["ramsey_contradiction"] = true;
        lengths[std::to_string(ell)] = std::move(item);
    }
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : report.steps())
        steps.push_back({{"operation", s.operation}, {"inequality", s.inequality}, {"satisfied", s.satisfied}, {"detail", s.detail}});
    return {{"n", report.order()}, {"lengths", std::move(lengths)}, {"steps", std::move(steps)}};
}

SpectrumReport report_from_json(const nlohmann::json& j)
{
    try {
        SpectrumReport report(j.at("n").get<int>());
        for (const auto& [key, item] : j.at("lengths").items()) {
            int ell = std::stoi(key);
            auto status = parse_status(item.at("status").get<std::string>());
            std::string source = item.value("source", std::string{});
            auto provenance = parse_provenance(item.value("provenance", std::string("none")));
            switch (status) {
            case LengthStatus::Witnessed: {
                CycleWitness c{item.at("witness").get<std::vector<Vertex>>()};
                if (c.length() != ell)
                    throw Error(ErrorKind::Parse, "witness for length " + key + " has " + std::to_string(c.length()) + " vertices");
                report.record_witness(c, source, provenance);
                break;
            }
            case LengthStatus::Present:
                report.record_present(ell, source, provenance);
                break;
            case LengthStatus::Absent:
                report.record_absent(ell, source, item.value("ramsey_contradiction", false));
                break;
            case LengthStatus::Unknown:
                report.record_unknown(ell, source, item.value("note", std::string{}));
                break;
            }
        }
        if (j.contains("steps"))
            for (const auto& s : j.at("steps"))
                report.add_step(s.value("operation", std::string{}), s.value("inequality", std::string{}),
                                s.value("satisfied", false), s.value("detail", std::string{}));
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("report JSON: ") + e.what());
    }
}

std::string to_plot_csv(const SpectrumReport& report)
{
    std::ostringstream out;
    out << "length,status,provenance\n";
    for (int ell = 3; ell <= report.order(); ++ell) {
        const auto* e = report.find(ell);
        out << ell << ',' << to_string(e ? e->status : LengthStatus::Unknown) << ','
            << to_string(e ? e->provenance : Provenance::None) << '\n';
    }
    return out.str();
}

} // namespace pancyclic
