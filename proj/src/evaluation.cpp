#include "expertfind/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

namespace expertfind {

Qrels load_qrels(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open qrels file: " + path);
    }
    Qrels qrels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
            throw std::runtime_error("qrels line " + std::to_string(lineno) +
                                     ": expected query<TAB>author_id");
        }
        std::string query = line.substr(0, tab);
        std::string author = line.substr(tab + 1);
        auto [it, inserted] = qrels.relevant.try_emplace(query);
        if (inserted) {
            qrels.queries.push_back(query);
        }
        it->second.insert(author);
    }
    return qrels;
}

double precision_at_k(const RankedList& ranked, const std::set<std::string>& relevant,
                      std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("precision_at_k: k must be positive");
    }
    std::size_t depth = std::min(k, ranked.entries.size());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < depth; ++i) {
        if (relevant.count(ranked.entries[i].author)) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(k);
}

double average_precision(const RankedList& ranked, const std::set<std::string>& relevant) {
    if (relevant.empty()) {
        throw std::invalid_argument("average_precision: empty relevant set");
    }
    double sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < ranked.entries.size(); ++i) {
        if (relevant.count(ranked.entries[i].author)) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(relevant.size());
}

double mean_average_precision(const std::vector<double>& per_query_ap) {
    if (per_query_ap.empty()) {
        throw std::invalid_argument("mean_average_precision: no queries");
    }
    double sum = 0.0;
    for (double ap : per_query_ap) {
        sum += ap;
    }
    return sum / static_cast<double>(per_query_ap.size());
}

double randomization_test(const std::vector<double>& scores_a,
                          const std::vector<double>& scores_b, std::size_t iterations,
                          std::uint64_t seed) {
    if (scores_a.size() != scores_b.size()) {
        throw std::invalid_argument("randomization_test: score vectors differ in length");
    }
    std::size_t n = scores_a.size();
    if (n < 2) {
        throw std::invalid_argument("randomization_test: need at least two paired queries");
    }
    if (iterations == 0) {
        throw std::invalid_argument("randomization_test: iterations must be positive");
    }
    std::vector<double> diff(n);
    double observed = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        diff[i] = scores_a[i] - scores_b[i];
        observed += diff[i];
    }
    observed = std::abs(observed);
    const double tolerance = 1e-12;

    if (n <= 12) {
        // exact: every sign assignment, no randomness involved
        std::size_t patterns = std::size_t{1} << n;
        std::size_t hits = 0;
        for (std::size_t bits = 0; bits < patterns; ++bits) {
            double total = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                total += (bits >> i) & 1 ? -diff[i] : diff[i];
            }
            if (std::abs(total) >= observed - tolerance) {
                ++hits;
            }
        }
        return static_cast<double>(hits) / static_cast<double>(patterns);
    }

    std::mt19937_64 rng(seed);
    std::size_t hits = 0;
    for (std::size_t it = 0; it < iterations; ++it) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            total += rng() & 1 ? -diff[i] : diff[i];
        }
        if (std::abs(total) >= observed - tolerance) {
            ++hits;
        }
    }
    return static_cast<double>(hits + 1) / static_cast<double>(iterations + 1);
}

}  // namespace expertfind
