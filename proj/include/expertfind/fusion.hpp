#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "expertfind/sensors.hpp"

namespace expertfind {

enum class FusionMethod { combsum, borda, condorcet };

std::string_view fusion_method_name(FusionMethod method);
FusionMethod parse_fusion_method(const std::string& name);

struct RankedEntry {
    std::string author;
    double score = 0.0;
};

/// Candidates ordered best-first. Scores are non-increasing; combsum and
/// borda break score ties by ascending author id, condorcet first by fewer
/// losses.
struct RankedList {
    FusionMethod method = FusionMethod::combsum;
    std::vector<RankedEntry> entries;
};

/// Sum of the normalized event scores per candidate.
RankedList combsum(const EventScoreTable& table);
RankedList combsum(const std::vector<std::string>& candidates,
                   const std::vector<std::vector<double>>& normalized);

/// Positional voting: within each event column the top candidate earns N
/// points, the next N-1, and so on; score ties share the averaged points of
/// the positions they span.
RankedList borda_fuse(const EventScoreTable& table);
RankedList borda_fuse(const std::vector<std::string>& candidates,
                      const std::vector<std::vector<double>>& normalized);

/// Pairwise majority: a beats b when strictly above it in more columns than
/// the reverse; ordering by wins descending, losses ascending, id ascending.
/// The reported score is the win count.
RankedList condorcet_fuse(const EventScoreTable& table);
RankedList condorcet_fuse(const std::vector<std::string>& candidates,
                          const std::vector<std::vector<double>>& normalized);

RankedList fuse(FusionMethod method, const EventScoreTable& table);
RankedList fuse(FusionMethod method, const std::vector<std::string>& candidates,
                const std::vector<std::vector<double>>& normalized);

}  // namespace expertfind
