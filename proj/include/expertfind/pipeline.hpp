#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "expertfind/evaluation.hpp"
#include "expertfind/evidence.hpp"

namespace expertfind {

enum class EvidenceMode { ds, plain };

std::string_view evidence_mode_name(EvidenceMode mode);
EvidenceMode parse_evidence_mode(const std::string& name);

/// Comma-separated sensor names, deduplicated into the canonical
/// text, profile, citation order.
std::vector<SensorKind> parse_sensor_list(const std::string& names);

struct RunConfig {
    std::string corpus_path;  // used by the index command only
    std::string index_path;
    std::vector<SensorKind> sensors = {SensorKind::text, SensorKind::citation};
    FusionMethod fusion = FusionMethod::combsum;
    EvidenceMode evidence = EvidenceMode::ds;
    std::size_t depth = 10;
    bool verbose = false;
    std::uint64_t seed = 42;
};

struct SearchOutcome {
    RankedList ranking;                 // full list; callers truncate to depth
    std::vector<SensorReport> reports;  // filled in ds mode
    std::vector<double> conflicts;      // K per pairwise combination (ds mode)
    MassFunction final_mass;            // combined mass (ds mode)
};

/// Full query pipeline: candidate pool, per-sensor extraction and fusion,
/// then either Dempster-Shafer combination (ds) or one more round of the
/// fusion method across the sensors' fused columns (plain). An empty
/// candidate pool yields an empty ranking.
SearchOutcome run_search(const Index& index, const Query& q, const RunConfig& config);

struct QueryMetrics {
    std::string query;
    double ap = 0.0;
    double p5 = 0.0;
    double p10 = 0.0;
    double p15 = 0.0;
    double p20 = 0.0;
};

struct EvalReport {
    std::vector<QueryMetrics> per_query;
    double map = 0.0;
    double mean_p5 = 0.0;
    double mean_p10 = 0.0;
    double mean_p15 = 0.0;
    double mean_p20 = 0.0;
};

/// Runs the search pipeline for every judged query. Queries whose text
/// yields no usable terms or that carry no relevant authors are skipped with
/// a warning on `warnings`.
EvalReport evaluate_queries(const Index& index, const Qrels& qrels, const RunConfig& config,
                            std::ostream* warnings = nullptr);

/// Tab-separated table: query, AP, P@5..P@20, with a final MAP row carrying
/// the column means.
std::string format_report(const EvalReport& report);

/// Reads (query, AP) pairs back from a formatted report.
std::vector<std::pair<std::string, double>> parse_report_aps(std::istream& in);

}  // namespace expertfind
