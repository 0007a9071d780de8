#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "expertfind/corpus.hpp"

namespace expertfind {

enum class SensorKind { text, profile, citation };

std::string_view sensor_name(SensorKind kind);

/// Per-sensor score matrix: one row per candidate (sorted by id), one column
/// per event from the fixed catalogue. `raw` holds the scores as extracted,
/// `normalized` the min-max rescaling of each column.
struct EventScoreTable {
    SensorKind sensor = SensorKind::text;
    std::vector<std::string> candidates;
    std::vector<std::string> events;
    std::vector<std::vector<double>> raw;         // [candidate][event]
    std::vector<std::vector<double>> normalized;  // same shape, in [0,1]
};

/// (v - min)/(max - min) per entry; a constant column maps to all zeros.
/// Throws std::invalid_argument on empty or non-finite input.
std::vector<double> min_max_normalize(const std::vector<double>& column);

/// Assembles a table from raw scores and fills the normalized matrix.
EventScoreTable make_event_table(SensorKind sensor,
                                 std::vector<std::string> candidates,
                                 std::vector<std::string> events,
                                 std::vector<std::vector<double>> raw);

/// Fixed catalogues; the public column names reports and tests refer to.
const std::vector<std::string>& text_event_names();
const std::vector<std::string>& profile_event_names();
const std::vector<std::string>& citation_event_names();

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
};

/// ln((N - df + 0.5)/(df + 0.5) + 1)
double bm25_idf(std::size_t num_docs, std::size_t doc_freq);

/// Okapi BM25 contribution of one term occurrence profile.
double bm25_term_score(double idf, double tf, double doc_len, double avg_doc_len,
                       const Bm25Params& params = {});

/// BM25 of a document for the query over the corpus-level statistics.
double bm25(const Index& index, const Query& q, std::uint32_t doc,
            const Bm25Params& params = {});

/// |intersection| / |union|; 0 when doc_terms is empty.
double jaccard(const std::set<std::string>& query_terms,
               const std::set<std::string>& doc_terms);

std::uint32_t citation_count(const Index& index, std::uint32_t doc);

/// Largest h such that at least h of the counts are >= h.
int h_index(std::vector<int> citation_counts);

/// Per-paper inputs for the author-level bibliometric indices.
struct PaperProfile {
    int citations = 0;
    int year = 0;
    int num_authors = 1;
    bool matched = false;          // paper contains the query topics
    std::vector<int> citing_years; // one entry per incoming citation
};

struct BibliometricIndices {
    int h = 0;
    int h_topic = 0;        // h over matched papers only
    int h_contemporary = 0; // age-discounted citation scores
    int h_trend = 0;        // age-discounted citing papers
    double h_individual = 0.0;
    int g = 0;
    double a = 0.0;
    double e = 0.0;
};

/// Indices from per-paper profiles. Papers tied on citations keep their
/// input order when the h-core is cut.
BibliometricIndices bibliometric_indices(std::span<const PaperProfile> papers, int now_year);

/// Same, with the profiles pulled from the index for one author.
BibliometricIndices bibliometric_indices(const Index& index, const std::string& author,
                                         const Query& q);

struct PageRankOptions {
    double damping = 0.85;
    double tol = 1e-8;      // L1 change between iterations
    int max_iter = 100;
};

/// Power iteration over the citation graph (edges point from citing to
/// cited); dangling mass is spread uniformly. Returns one score per document
/// in corpus order, summing to 1.
std::vector<double> pagerank(const Index& index, const PageRankOptions& options = {});

EventScoreTable extract_text_events(const Index& index, const Query& q,
                                    const std::vector<std::string>& candidates);
EventScoreTable extract_profile_events(const Index& index, const Query& q,
                                       const std::vector<std::string>& candidates);
EventScoreTable extract_citation_events(const Index& index, const Query& q,
                                        const std::vector<std::string>& candidates);

}  // namespace expertfind
