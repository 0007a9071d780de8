#include "expertfind/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace expertfind {

std::string_view fusion_method_name(FusionMethod method) {
    switch (method) {
        case FusionMethod::combsum: return "combsum";
        case FusionMethod::borda: return "borda";
        case FusionMethod::condorcet: return "condorcet";
    }
    return "?";
}

FusionMethod parse_fusion_method(const std::string& name) {
    if (name == "combsum") return FusionMethod::combsum;
    if (name == "borda") return FusionMethod::borda;
    if (name == "condorcet") return FusionMethod::condorcet;
    throw std::invalid_argument("unknown fusion method: " + name);
}

namespace {

void check_shape(const std::vector<std::string>& candidates,
                 const std::vector<std::vector<double>>& matrix) {
    if (matrix.size() != candidates.size()) {
        throw std::invalid_argument("fusion: matrix rows != candidate count");
    }
}

RankedList ranked_by_score(FusionMethod method, const std::vector<std::string>& candidates,
                           const std::vector<double>& scores) {
    RankedList out;
    out.method = method;
    out.entries.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        out.entries.push_back({candidates[i], scores[i]});
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const RankedEntry& a, const RankedEntry& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.author < b.author;
              });
    return out;
}

}  // namespace

RankedList combsum(const std::vector<std::string>& candidates,
                   const std::vector<std::vector<double>>& normalized) {
    check_shape(candidates, normalized);
    std::vector<double> scores(candidates.size(), 0.0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        scores[i] = std::accumulate(normalized[i].begin(), normalized[i].end(), 0.0);
    }
    return ranked_by_score(FusionMethod::combsum, candidates, scores);
}

RankedList combsum(const EventScoreTable& table) {
    return combsum(table.candidates, table.normalized);
}

RankedList borda_fuse(const std::vector<std::string>& candidates,
                      const std::vector<std::vector<double>>& normalized) {
    check_shape(candidates, normalized);
    std::size_t n = candidates.size();
    std::size_t num_events = n == 0 ? 0 : normalized[0].size();
    std::vector<double> points(n, 0.0);
    std::vector<std::size_t> order(n);
    for (std::size_t e = 0; e < num_events; ++e) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return normalized[a][e] > normalized[b][e];
        });
        // Walk groups of equal scores; members share the averaged points of
        // the positions the group spans.
        std::size_t pos = 0;
        while (pos < n) {
            std::size_t end = pos + 1;
            while (end < n && normalized[order[end]][e] == normalized[order[pos]][e]) {
                ++end;
            }
            // positions pos+1 .. end earn n-pos .. n-end+1 points
            double total = 0.0;
            for (std::size_t p = pos; p < end; ++p) {
                total += static_cast<double>(n - p);
            }
            double share = total / static_cast<double>(end - pos);
            for (std::size_t p = pos; p < end; ++p) {
                points[order[p]] += share;
            }
            pos = end;
        }
    }
    return ranked_by_score(FusionMethod::borda, candidates, points);
}

RankedList borda_fuse(const EventScoreTable& table) {
    return borda_fuse(table.candidates, table.normalized);
}

RankedList condorcet_fuse(const std::vector<std::string>& candidates,
                          const std::vector<std::vector<double>>& normalized) {
    check_shape(candidates, normalized);
    std::size_t n = candidates.size();
    std::size_t num_events = n == 0 ? 0 : normalized[0].size();
    std::vector<int> wins(n, 0), losses(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            int above_i = 0, above_j = 0;
            for (std::size_t e = 0; e < num_events; ++e) {
                if (normalized[i][e] > normalized[j][e]) {
                    ++above_i;
                } else if (normalized[j][e] > normalized[i][e]) {
                    ++above_j;
                }
            }
            if (above_i > above_j) {
                ++wins[i];
                ++losses[j];
            } else if (above_j > above_i) {
                ++wins[j];
                ++losses[i];
            }
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (wins[a] != wins[b]) return wins[a] > wins[b];
        if (losses[a] != losses[b]) return losses[a] < losses[b];
        return candidates[a] < candidates[b];
    });
    RankedList out;
    out.method = FusionMethod::condorcet;
    out.entries.reserve(n);
    for (auto idx : order) {
        out.entries.push_back({candidates[idx], static_cast<double>(wins[idx])});
    }
    return out;
}

RankedList condorcet_fuse(const EventScoreTable& table) {
    return condorcet_fuse(table.candidates, table.normalized);
}

RankedList fuse(FusionMethod method, const std::vector<std::string>& candidates,
                const std::vector<std::vector<double>>& normalized) {
    switch (method) {
        case FusionMethod::combsum: return combsum(candidates, normalized);
        case FusionMethod::borda: return borda_fuse(candidates, normalized);
        case FusionMethod::condorcet: return condorcet_fuse(candidates, normalized);
    }
    throw std::invalid_argument("unknown fusion method");
}

RankedList fuse(FusionMethod method, const EventScoreTable& table) {
    return fuse(method, table.candidates, table.normalized);
}

}  // namespace expertfind
