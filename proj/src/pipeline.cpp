#include "expertfind/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace expertfind {

std::string_view evidence_mode_name(EvidenceMode mode) {
    return mode == EvidenceMode::ds ? "ds" : "plain";
}

EvidenceMode parse_evidence_mode(const std::string& name) {
    if (name == "ds") return EvidenceMode::ds;
    if (name == "plain") return EvidenceMode::plain;
    throw std::invalid_argument("unknown evidence mode: " + name);
}

std::vector<SensorKind> parse_sensor_list(const std::string& names) {
    bool want_text = false, want_profile = false, want_citation = false;
    std::stringstream ss(names);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "text") {
            want_text = true;
        } else if (item == "profile") {
            want_profile = true;
        } else if (item == "citation") {
            want_citation = true;
        } else if (!item.empty()) {
            throw std::invalid_argument("unknown sensor: " + item);
        }
    }
    std::vector<SensorKind> out;
    if (want_text) out.push_back(SensorKind::text);
    if (want_profile) out.push_back(SensorKind::profile);
    if (want_citation) out.push_back(SensorKind::citation);
    if (out.empty()) {
        throw std::invalid_argument("sensor list is empty: " + names);
    }
    return out;
}

namespace {

EventScoreTable extract_events(SensorKind sensor, const Index& index, const Query& q,
                               const std::vector<std::string>& candidates) {
    switch (sensor) {
        case SensorKind::text: return extract_text_events(index, q, candidates);
        case SensorKind::profile: return extract_profile_events(index, q, candidates);
        case SensorKind::citation: return extract_citation_events(index, q, candidates);
    }
    throw std::invalid_argument("unknown sensor kind");
}

// Scores feeding the mass construction: condorcet win counts go through
// min-max first, combsum/borda scores are used as fused.
RankedList mass_input(const RankedList& fused, FusionMethod method) {
    if (method != FusionMethod::condorcet || fused.entries.empty()) {
        return fused;
    }
    std::vector<double> wins;
    wins.reserve(fused.entries.size());
    for (const auto& e : fused.entries) {
        wins.push_back(e.score);
    }
    auto normalized = min_max_normalize(wins);
    RankedList out = fused;
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
        out.entries[i].score = normalized[i];
    }
    return out;
}

RankedList plain_cross_fusion(const std::vector<RankedList>& fused,
                              const std::vector<std::string>& candidates,
                              FusionMethod method) {
    // one column per sensor: that sensor's fused score of each candidate
    std::vector<std::vector<double>> raw(candidates.size(),
                                         std::vector<double>(fused.size(), 0.0));
    for (std::size_t s = 0; s < fused.size(); ++s) {
        for (const auto& entry : fused[s].entries) {
            auto it = std::lower_bound(candidates.begin(), candidates.end(), entry.author);
            raw[static_cast<std::size_t>(it - candidates.begin())][s] = entry.score;
        }
    }
    std::vector<std::vector<double>> normalized(candidates.size(),
                                                std::vector<double>(fused.size(), 0.0));
    std::vector<double> column(candidates.size());
    for (std::size_t s = 0; s < fused.size(); ++s) {
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            column[c] = raw[c][s];
        }
        auto norm = min_max_normalize(column);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            normalized[c][s] = norm[c];
        }
    }
    return fuse(method, candidates, normalized);
}

}  // namespace

SearchOutcome run_search(const Index& index, const Query& q, const RunConfig& config) {
    if (config.sensors.empty()) {
        throw std::invalid_argument("run_search: no sensors configured");
    }
    SearchOutcome outcome;
    outcome.ranking.method = config.fusion;
    auto candidates = candidates_for_query(index, q);
    if (candidates.empty()) {
        return outcome;
    }

    std::vector<EventScoreTable> tables;
    tables.reserve(config.sensors.size());
    for (auto sensor : config.sensors) {
        tables.push_back(extract_events(sensor, index, q, candidates));
    }
    std::vector<RankedList> fused;
    fused.reserve(tables.size());
    for (const auto& table : tables) {
        fused.push_back(fuse(config.fusion, table));
    }

    if (config.evidence == EvidenceMode::plain) {
        outcome.ranking = plain_cross_fusion(fused, candidates, config.fusion);
        return outcome;
    }

    std::vector<SensorEvidence> evidence;
    evidence.reserve(tables.size());
    for (std::size_t i = 0; i < tables.size(); ++i) {
        auto [h, max_h] = sensor_entropy(tables[i]);
        evidence.push_back({mass_input(fused[i], config.fusion), h, max_h});
    }
    auto masses = build_mass_functions(evidence, candidates);
    for (std::size_t i = 0; i < tables.size(); ++i) {
        SensorReport report;
        report.sensor = tables[i].sensor;
        report.fused = fused[i];
        report.entropy = evidence[i].entropy;
        report.max_entropy = evidence[i].max_entropy;
        report.mass = std::move(masses[i]);
        outcome.reports.push_back(std::move(report));
    }
    auto fold = fold_masses(outcome.reports);
    outcome.conflicts = fold.conflicts;
    outcome.final_mass = std::move(fold.mass);
    outcome.ranking.entries.reserve(outcome.final_mass.frame.size());
    for (std::size_t i = 0; i < outcome.final_mass.frame.size(); ++i) {
        outcome.ranking.entries.push_back(
            {outcome.final_mass.frame[i], outcome.final_mass.singleton[i]});
    }
    std::sort(outcome.ranking.entries.begin(), outcome.ranking.entries.end(),
              [](const RankedEntry& a, const RankedEntry& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.author < b.author;
              });
    return outcome;
}

namespace {

std::string format_metric(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

EvalReport evaluate_queries(const Index& index, const Qrels& qrels, const RunConfig& config,
                            std::ostream* warnings) {
    EvalReport report;
    for (const auto& query_text : qrels.queries) {
        const auto& relevant = qrels.relevant.at(query_text);
        if (relevant.empty()) {
            if (warnings) {
                *warnings << "warning: query \"" << query_text
                          << "\" has no relevant authors, skipped\n";
            }
            continue;
        }
        Query q;
        try {
            q = make_query(query_text);
        } catch (const std::invalid_argument&) {
            if (warnings) {
                *warnings << "warning: query \"" << query_text
                          << "\" has no usable terms, skipped\n";
            }
            continue;
        }
        auto outcome = run_search(index, q, config);
        RankedList truncated = outcome.ranking;
        if (truncated.entries.size() > config.depth) {
            truncated.entries.resize(config.depth);
        }
        QueryMetrics metrics;
        metrics.query = query_text;
        metrics.ap = average_precision(truncated, relevant);
        metrics.p5 = precision_at_k(truncated, relevant, 5);
        metrics.p10 = precision_at_k(truncated, relevant, 10);
        metrics.p15 = precision_at_k(truncated, relevant, 15);
        metrics.p20 = precision_at_k(truncated, relevant, 20);
        report.per_query.push_back(std::move(metrics));
    }
    if (!report.per_query.empty()) {
        double n = static_cast<double>(report.per_query.size());
        for (const auto& m : report.per_query) {
            report.map += m.ap;
            report.mean_p5 += m.p5;
            report.mean_p10 += m.p10;
            report.mean_p15 += m.p15;
            report.mean_p20 += m.p20;
        }
        report.map /= n;
        report.mean_p5 /= n;
        report.mean_p10 /= n;
        report.mean_p15 /= n;
        report.mean_p20 /= n;
    }
    return report;
}

std::string format_report(const EvalReport& report) {
    std::string out = "query\tAP\tP@5\tP@10\tP@15\tP@20\n";
    for (const auto& m : report.per_query) {
        out += m.query;
        out += '\t';
        out += format_metric(m.ap);
        out += '\t';
        out += format_metric(m.p5);
        out += '\t';
        out += format_metric(m.p10);
        out += '\t';
        out += format_metric(m.p15);
        out += '\t';
        out += format_metric(m.p20);
        out += '\n';
    }
    out += "MAP\t" + format_metric(report.map) + '\t' + format_metric(report.mean_p5) + '\t' +
           format_metric(report.mean_p10) + '\t' + format_metric(report.mean_p15) + '\t' +
           format_metric(report.mean_p20) + '\n';
    return out;
}

std::vector<std::pair<std::string, double>> parse_report_aps(std::istream& in) {
    std::vector<std::pair<std::string, double>> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (first) {
            first = false;
            if (line.rfind("query\t", 0) == 0) {
                continue;
            }
        }
        auto tab1 = line.find('\t');
        if (tab1 == std::string::npos) {
            throw std::runtime_error("malformed report line: " + line);
        }
        std::string query = line.substr(0, tab1);
        if (query == "MAP") {
            break;
        }
        auto tab2 = line.find('\t', tab1 + 1);
        std::string ap_text = line.substr(tab1 + 1, tab2 == std::string::npos
                                                        ? std::string::npos
                                                        : tab2 - tab1 - 1);
        out.emplace_back(query, std::stod(ap_text));
    }
    return out;
}

}  // namespace expertfind
