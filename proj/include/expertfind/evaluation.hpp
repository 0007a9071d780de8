#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "expertfind/fusion.hpp"

namespace expertfind {

/// Relevance judgments: query text -> relevant author ids. Queries keep
/// their first-appearance order from the qrels file.
struct Qrels {
    std::vector<std::string> queries;
    std::map<std::string, std::set<std::string>> relevant;
};

/// Parses tab-separated `query<TAB>author_id` lines.
Qrels load_qrels(const std::string& path);

/// Fraction of relevant authors among the first k positions (denominator
/// stays k for short lists).
double precision_at_k(const RankedList& ranked, const std::set<std::string>& relevant,
                      std::size_t k);

/// Mean of the precision at each relevant retrieved position, divided by the
/// total number of relevant authors. Throws on an empty relevant set.
double average_precision(const RankedList& ranked, const std::set<std::string>& relevant);

double mean_average_precision(const std::vector<double>& per_query_ap);

/// Paired two-sided randomization test on per-query metric vectors. For 12
/// or fewer queries every sign pattern is enumerated (p = hits / 2^n);
/// otherwise `iterations` seeded random flips are drawn and
/// p = (hits + 1)/(iterations + 1).
double randomization_test(const std::vector<double>& scores_a,
                          const std::vector<double>& scores_b, std::size_t iterations,
                          std::uint64_t seed);

}  // namespace expertfind
