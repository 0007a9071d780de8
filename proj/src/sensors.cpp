#include "expertfind/sensors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace expertfind {

std::string_view sensor_name(SensorKind kind) {
    switch (kind) {
        case SensorKind::text: return "text";
        case SensorKind::profile: return "profile";
        case SensorKind::citation: return "citation";
    }
    return "?";
}

std::vector<double> min_max_normalize(const std::vector<double>& column) {
    if (column.empty()) {
        throw std::invalid_argument("min_max_normalize: empty column");
    }
    for (double v : column) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("min_max_normalize: non-finite value");
        }
    }
    auto [lo_it, hi_it] = std::minmax_element(column.begin(), column.end());
    double lo = *lo_it, hi = *hi_it;
    std::vector<double> out(column.size(), 0.0);
    if (hi > lo) {
        for (std::size_t i = 0; i < column.size(); ++i) {
            out[i] = (column[i] - lo) / (hi - lo);
        }
    }
    return out;
}

EventScoreTable make_event_table(SensorKind sensor,
                                 std::vector<std::string> candidates,
                                 std::vector<std::string> events,
                                 std::vector<std::vector<double>> raw) {
    if (raw.size() != candidates.size()) {
        throw std::invalid_argument("make_event_table: row count != candidate count");
    }
    for (const auto& row : raw) {
        if (row.size() != events.size()) {
            throw std::invalid_argument("make_event_table: column count != event count");
        }
    }
    EventScoreTable table;
    table.sensor = sensor;
    table.candidates = std::move(candidates);
    table.events = std::move(events);
    table.raw = std::move(raw);
    table.normalized.assign(table.candidates.size(),
                            std::vector<double>(table.events.size(), 0.0));
    std::vector<double> column(table.candidates.size());
    for (std::size_t e = 0; e < table.events.size(); ++e) {
        for (std::size_t c = 0; c < table.candidates.size(); ++c) {
            column[c] = table.raw[c][e];
        }
        auto normalized = min_max_normalize(column);
        for (std::size_t c = 0; c < table.candidates.size(); ++c) {
            table.normalized[c][e] = normalized[c];
        }
    }
    return table;
}

const std::vector<std::string>& text_event_names() {
    static const std::vector<std::string> names = {
        "text.tf",
        "text.idf",
        "text.doc_len",
        "text.unique_authors",
        "text.bm25.sum",
        "text.bm25.avg",
        "text.bm25.max",
        "text.jaccard.sum",
        "text.jaccard.avg",
        "text.jaccard.max",
        "text.bm25_conf.sum",
        "text.bm25_conf.avg",
        "text.bm25_conf.max",
        "text.bm25_journ.sum",
        "text.bm25_journ.avg",
        "text.bm25_journ.max",
        "text.jaccard_conf.sum",
        "text.jaccard_conf.avg",
        "text.jaccard_conf.max",
        "text.jaccard_journ.sum",
        "text.jaccard_journ.avg",
        "text.jaccard_journ.max",
    };
    return names;
}

const std::vector<std::string>& profile_event_names() {
    static const std::vector<std::string> names = {
        "profile.pubs_topic",
        "profile.pubs_nontopic",
        "profile.journ_topic",
        "profile.journ_nontopic",
        "profile.years_since_first_pub_topic",
        "profile.years_since_first_pub_nontopic",
        "profile.years_since_first_journ_topic",
        "profile.years_since_first_journ_nontopic",
        "profile.years_since_last_pub_topic",
        "profile.years_since_last_pub_nontopic",
        "profile.years_since_last_journ_topic",
        "profile.years_since_last_journ_nontopic",
        "profile.span_pub_topic",
        "profile.span_pub_nontopic",
        "profile.span_journ_topic",
        "profile.span_journ_nontopic",
        "profile.pubs_per_year",
        "profile.journ_per_year",
    };
    return names;
}

const std::vector<std::string>& citation_event_names() {
    static const std::vector<std::string> names = {
        "citation.cites_topic",
        "citation.cites_nontopic",
        "citation.cites_topic.avg",
        "citation.cites_per_year.avg",
        "citation.cites_topic.max",
        "citation.collaborators",
        "citation.h_index",
        "citation.h_index_topic",
        "citation.h_contemporary",
        "citation.h_trend",
        "citation.h_individual",
        "citation.g_index",
        "citation.a_index",
        "citation.e_index",
        "citation.pagerank.sum",
        "citation.pagerank.avg",
    };
    return names;
}

double bm25_idf(std::size_t num_docs, std::size_t doc_freq) {
    double n = static_cast<double>(num_docs);
    double df = static_cast<double>(doc_freq);
    return std::log((n - df + 0.5) / (df + 0.5) + 1.0);
}

double bm25_term_score(double idf, double tf, double doc_len, double avg_doc_len,
                       const Bm25Params& params) {
    if (tf <= 0.0) {
        return 0.0;
    }
    double norm = params.k1 * (1.0 - params.b + params.b * doc_len / avg_doc_len);
    return idf * (tf * (params.k1 + 1.0)) / (tf + norm);
}

double bm25(const Index& index, const Query& q, std::uint32_t doc, const Bm25Params& params) {
    double score = 0.0;
    for (const auto& term : q.terms) {
        auto it = index.postings.find(term);
        if (it == index.postings.end()) {
            continue;
        }
        const auto& posts = it->second;
        auto post = std::lower_bound(posts.begin(), posts.end(), doc,
                                     [](const Posting& p, std::uint32_t d) { return p.doc < d; });
        if (post == posts.end() || post->doc != doc) {
            continue;
        }
        score += bm25_term_score(bm25_idf(index.num_docs, posts.size()),
                                 static_cast<double>(post->tf),
                                 static_cast<double>(index.doc_len[doc]), index.avg_doc_len,
                                 params);
    }
    return score;
}

double jaccard(const std::set<std::string>& query_terms,
               const std::set<std::string>& doc_terms) {
    if (query_terms.empty()) {
        throw std::invalid_argument("jaccard: empty query term set");
    }
    if (doc_terms.empty()) {
        return 0.0;
    }
    std::size_t inter = 0;
    for (const auto& t : query_terms) {
        inter += doc_terms.count(t);
    }
    std::size_t uni = query_terms.size() + doc_terms.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

std::uint32_t citation_count(const Index& index, std::uint32_t doc) {
    return static_cast<std::uint32_t>(index.citation_in.at(doc).size());
}

int h_index(std::vector<int> citation_counts) {
    std::sort(citation_counts.begin(), citation_counts.end(), std::greater<>());
    int h = 0;
    for (std::size_t i = 0; i < citation_counts.size(); ++i) {
        if (citation_counts[i] >= static_cast<int>(i) + 1) {
            h = static_cast<int>(i) + 1;
        } else {
            break;
        }
    }
    return h;
}

namespace {

// Largest h with at least h scores >= h, over real-valued scores.
int h_index_real(std::vector<double> scores) {
    std::sort(scores.begin(), scores.end(), std::greater<>());
    int h = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] >= static_cast<double>(i) + 1.0) {
            h = static_cast<int>(i) + 1;
        } else {
            break;
        }
    }
    return h;
}

constexpr double kSidiropoulosGamma = 4.0;
constexpr double kSidiropoulosDelta = 1.0;

double age_discount(int now_year, int year) {
    double age = static_cast<double>(now_year - year + 1);
    return std::pow(age, -kSidiropoulosDelta);
}

}  // namespace

BibliometricIndices bibliometric_indices(std::span<const PaperProfile> papers, int now_year) {
    BibliometricIndices out;
    if (papers.empty()) {
        return out;
    }

    // Papers ordered by citations descending, ties keeping input order; the
    // prefix of this ordering is the h-core / g-core.
    std::vector<std::size_t> order(papers.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return papers[a].citations > papers[b].citations;
    });

    std::vector<int> counts;
    std::vector<int> matched_counts;
    counts.reserve(papers.size());
    for (const auto& p : papers) {
        counts.push_back(p.citations);
        if (p.matched) {
            matched_counts.push_back(p.citations);
        }
    }
    out.h = h_index(counts);
    out.h_topic = h_index(std::move(matched_counts));

    std::vector<double> contemporary;
    std::vector<double> trend;
    contemporary.reserve(papers.size());
    trend.reserve(papers.size());
    for (const auto& p : papers) {
        contemporary.push_back(kSidiropoulosGamma * age_discount(now_year, p.year) *
                               static_cast<double>(p.citations));
        double t = 0.0;
        for (int citing_year : p.citing_years) {
            t += age_discount(now_year, citing_year);
        }
        trend.push_back(kSidiropoulosGamma * t);
    }
    out.h_contemporary = h_index_real(std::move(contemporary));
    out.h_trend = h_index_real(std::move(trend));

    if (out.h > 0) {
        long long core_cites = 0;
        long long core_author_slots = 0;
        for (int i = 0; i < out.h; ++i) {
            const auto& p = papers[order[static_cast<std::size_t>(i)]];
            core_cites += p.citations;
            core_author_slots += p.num_authors;
        }
        out.h_individual = static_cast<double>(out.h) * static_cast<double>(out.h) /
                           static_cast<double>(core_author_slots);
        out.a = static_cast<double>(core_cites) / static_cast<double>(out.h);
        out.e = std::sqrt(static_cast<double>(core_cites) -
                          static_cast<double>(out.h) * static_cast<double>(out.h));
    }

    long long running = 0;
    for (std::size_t g = 1; g <= papers.size(); ++g) {
        running += papers[order[g - 1]].citations;
        if (running >= static_cast<long long>(g) * static_cast<long long>(g)) {
            out.g = static_cast<int>(g);
        }
    }
    return out;
}

BibliometricIndices bibliometric_indices(const Index& index, const std::string& author,
                                         const Query& q) {
    auto it = index.author_pubs.find(author);
    if (it == index.author_pubs.end()) {
        throw std::invalid_argument("unknown author: " + author);
    }
    auto matched = match_documents(index, q);
    std::unordered_set<std::uint32_t> matched_set(matched.begin(), matched.end());
    std::vector<PaperProfile> profiles;
    profiles.reserve(it->second.size());
    for (auto doc : it->second) {
        PaperProfile p;
        p.citations = static_cast<int>(index.citation_in[doc].size());
        p.year = index.pubs[doc].year;
        p.num_authors = static_cast<int>(index.pubs[doc].author_ids.size());
        p.matched = matched_set.count(doc) > 0;
        for (auto citing : index.citation_in[doc]) {
            p.citing_years.push_back(index.pubs[citing].year);
        }
        profiles.push_back(std::move(p));
    }
    return bibliometric_indices(profiles, index.now_year);
}

std::vector<double> pagerank(const Index& index, const PageRankOptions& options) {
    if (options.damping <= 0.0 || options.damping >= 1.0) {
        throw std::invalid_argument("pagerank: damping must lie in (0,1)");
    }
    std::size_t n = index.num_docs;
    if (n == 0) {
        return {};
    }
    double inv_n = 1.0 / static_cast<double>(n);
    std::vector<double> rank(n, inv_n);
    std::vector<double> next(n, 0.0);
    for (int iter = 0; iter < options.max_iter; ++iter) {
        double dangling = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (index.citation_out[i].empty()) {
                dangling += rank[i];
            }
        }
        double base = (1.0 - options.damping) * inv_n +
                      options.damping * dangling * inv_n;
        std::fill(next.begin(), next.end(), base);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& out_edges = index.citation_out[i];
            if (out_edges.empty()) {
                continue;
            }
            double share = options.damping * rank[i] / static_cast<double>(out_edges.size());
            for (auto target : out_edges) {
                next[target] += share;
            }
        }
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            change += std::abs(next[i] - rank[i]);
        }
        rank.swap(next);
        if (change < options.tol) {
            break;
        }
    }
    double total = std::accumulate(rank.begin(), rank.end(), 0.0);
    for (auto& r : rank) {
        r /= total;
    }
    return rank;
}

namespace {

std::vector<std::string> sorted_candidates(const std::vector<std::string>& candidates) {
    if (candidates.empty()) {
        throw std::invalid_argument("sensor extraction requires a nonempty candidate set");
    }
    std::vector<std::string> out = candidates;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Matched docs of one author, via intersection of two ascending id lists.
std::vector<std::uint32_t> matched_docs_of(const Index& index, const std::string& author,
                                           const std::vector<std::uint32_t>& matched) {
    std::vector<std::uint32_t> out;
    auto it = index.author_pubs.find(author);
    if (it == index.author_pubs.end()) {
        return out;
    }
    std::set_intersection(it->second.begin(), it->second.end(), matched.begin(), matched.end(),
                          std::back_inserter(out));
    return out;
}

struct TripleAccumulator {
    double sum = 0.0;
    double max = 0.0;
    std::size_t count = 0;

    void add(double v) {
        sum += v;
        max = std::max(max, v);
        ++count;
    }
    double avg() const { return count == 0 ? 0.0 : sum / static_cast<double>(count); }
};

// Concatenation of a venue's matched titles+abstracts, scored like one
// document over the venue-level pseudo corpus.
struct VenueDoc {
    std::unordered_map<std::string, std::uint32_t> tf;
    std::uint32_t len = 0;
};

struct VenueCorpus {
    std::unordered_map<std::string, VenueDoc> docs;  // venue name -> pseudo doc
    std::unordered_map<std::string, std::size_t> df; // query term -> venue doc freq
    double avg_len = 0.0;

    double bm25_of(const Query& q, const VenueDoc& doc, const Bm25Params& params) const {
        double score = 0.0;
        for (const auto& term : q.terms) {
            auto tf_it = doc.tf.find(term);
            if (tf_it == doc.tf.end()) {
                continue;
            }
            auto df_it = df.find(term);
            std::size_t term_df = df_it == df.end() ? 0 : df_it->second;
            score += bm25_term_score(bm25_idf(docs.size(), term_df),
                                     static_cast<double>(tf_it->second),
                                     static_cast<double>(doc.len), avg_len, params);
        }
        return score;
    }

    double jaccard_of(const Query& q, const VenueDoc& doc) const {
        if (doc.tf.empty()) {
            return 0.0;
        }
        std::size_t inter = 0;
        for (const auto& term : q.terms) {
            inter += doc.tf.count(term);
        }
        std::size_t uni = q.terms.size() + doc.tf.size() - inter;
        return static_cast<double>(inter) / static_cast<double>(uni);
    }
};

VenueCorpus build_venue_corpus(const Index& index, const Query& q,
                               const std::vector<std::uint32_t>& matched) {
    VenueCorpus corpus;
    for (auto doc : matched) {
        const auto& p = index.pubs[doc];
        auto& venue = corpus.docs[p.venue];
        std::string text = p.title;
        if (p.abstract) {
            text += ' ';
            text += *p.abstract;
        }
        for (auto& tok : tokenize(text)) {
            ++venue.tf[tok];
            ++venue.len;
        }
    }
    std::uint64_t total_len = 0;
    for (const auto& [name, doc] : corpus.docs) {
        total_len += doc.len;
        for (const auto& term : q.terms) {
            if (doc.tf.count(term)) {
                ++corpus.df[term];
            }
        }
    }
    if (!corpus.docs.empty()) {
        corpus.avg_len = static_cast<double>(total_len) / static_cast<double>(corpus.docs.size());
    }
    return corpus;
}

}  // namespace

EventScoreTable extract_text_events(const Index& index, const Query& q,
                                    const std::vector<std::string>& candidates) {
    auto cands = sorted_candidates(candidates);
    auto matched = match_documents(index, q);
    auto venues = build_venue_corpus(index, q, matched);
    Bm25Params params;

    // tf of each query term per doc, for O(1) lookups in the candidate loop
    std::unordered_map<std::string, std::unordered_map<std::uint32_t, std::uint32_t>> term_tf;
    for (const auto& term : q.terms) {
        auto it = index.postings.find(term);
        if (it == index.postings.end()) {
            continue;
        }
        auto& by_doc = term_tf[term];
        for (const auto& post : it->second) {
            by_doc.emplace(post.doc, post.tf);
        }
    }

    std::vector<std::vector<double>> raw(cands.size(),
                                         std::vector<double>(text_event_names().size(), 0.0));
    for (std::size_t c = 0; c < cands.size(); ++c) {
        auto docs = matched_docs_of(index, cands[c], matched);
        if (docs.empty()) {
            continue;  // all-zero row
        }
        auto& row = raw[c];

        double tf_sum = 0.0;
        double len_sum = 0.0;
        std::set<std::string> others;
        TripleAccumulator doc_bm25, doc_jaccard;
        for (auto doc : docs) {
            std::size_t query_terms_present = 0;
            for (const auto& term : q.terms) {
                auto by_doc = term_tf.find(term);
                if (by_doc == term_tf.end()) {
                    continue;
                }
                auto tf_it = by_doc->second.find(doc);
                if (tf_it != by_doc->second.end()) {
                    tf_sum += tf_it->second;
                    ++query_terms_present;
                }
            }
            len_sum += index.doc_len[doc];
            for (const auto& a : index.pubs[doc].author_ids) {
                if (a != cands[c]) {
                    others.insert(a);
                }
            }
            doc_bm25.add(bm25(index, q, doc, params));
            std::size_t distinct = index.distinct_terms[doc];
            double jac = distinct == 0
                             ? 0.0
                             : static_cast<double>(query_terms_present) /
                                   static_cast<double>(q.terms.size() + distinct -
                                                       query_terms_present);
            doc_jaccard.add(jac);
        }

        double idf_sum = 0.0;
        for (const auto& term : q.terms) {
            auto by_doc = term_tf.find(term);
            if (by_doc == term_tf.end()) {
                continue;
            }
            bool present = std::any_of(docs.begin(), docs.end(), [&](std::uint32_t d) {
                return by_doc->second.count(d) > 0;
            });
            if (present) {
                idf_sum += bm25_idf(index.num_docs, index.postings.at(term).size());
            }
        }

        row[0] = tf_sum;
        row[1] = idf_sum;
        row[2] = len_sum / static_cast<double>(docs.size());
        row[3] = static_cast<double>(others.size());
        row[4] = doc_bm25.sum;
        row[5] = doc_bm25.avg();
        row[6] = doc_bm25.max;
        row[7] = doc_jaccard.sum;
        row[8] = doc_jaccard.avg();
        row[9] = doc_jaccard.max;

        // Venue-level scores: every venue the candidate published in counts,
        // venues without matched content contribute zero.
        auto pubs_it = index.author_pubs.find(cands[c]);
        std::set<std::string> conf_venues, journ_venues;
        for (auto doc : pubs_it->second) {
            const auto& p = index.pubs[doc];
            (p.venue_kind == VenueKind::conference ? conf_venues : journ_venues).insert(p.venue);
        }
        auto venue_triples = [&](const std::set<std::string>& names, TripleAccumulator& bm,
                                 TripleAccumulator& jac) {
            for (const auto& name : names) {
                auto it = venues.docs.find(name);
                if (it == venues.docs.end()) {
                    bm.add(0.0);
                    jac.add(0.0);
                } else {
                    bm.add(venues.bm25_of(q, it->second, params));
                    jac.add(venues.jaccard_of(q, it->second));
                }
            }
        };
        TripleAccumulator conf_bm25, conf_jac, journ_bm25, journ_jac;
        venue_triples(conf_venues, conf_bm25, conf_jac);
        venue_triples(journ_venues, journ_bm25, journ_jac);
        row[10] = conf_bm25.sum;
        row[11] = conf_bm25.avg();
        row[12] = conf_bm25.max;
        row[13] = journ_bm25.sum;
        row[14] = journ_bm25.avg();
        row[15] = journ_bm25.max;
        row[16] = conf_jac.sum;
        row[17] = conf_jac.avg();
        row[18] = conf_jac.max;
        row[19] = journ_jac.sum;
        row[20] = journ_jac.avg();
        row[21] = journ_jac.max;
    }
    return make_event_table(SensorKind::text, std::move(cands), text_event_names(),
                            std::move(raw));
}

namespace {

struct YearSpan {
    int first = 0;
    int last = 0;
    std::size_t count = 0;

    void add(int year) {
        if (count == 0) {
            first = last = year;
        } else {
            first = std::min(first, year);
            last = std::max(last, year);
        }
        ++count;
    }
    double since_first(int now) const { return count == 0 ? 0.0 : std::max(0, now - first); }
    double since_last(int now) const { return count == 0 ? 0.0 : std::max(0, now - last); }
    double span() const { return count == 0 ? 0.0 : last - first; }
    double per_year() const {
        return count == 0 ? 0.0 : static_cast<double>(count) / (span() + 1.0);
    }
};

}  // namespace

EventScoreTable extract_profile_events(const Index& index, const Query& q,
                                       const std::vector<std::string>& candidates) {
    auto cands = sorted_candidates(candidates);
    auto matched = match_documents(index, q);
    std::unordered_set<std::uint32_t> matched_set(matched.begin(), matched.end());

    std::vector<std::vector<double>> raw(cands.size(),
                                         std::vector<double>(profile_event_names().size(), 0.0));
    for (std::size_t c = 0; c < cands.size(); ++c) {
        auto it = index.author_pubs.find(cands[c]);
        if (it == index.author_pubs.end()) {
            continue;
        }
        YearSpan pub_topic, pub_nontopic, journ_topic, journ_nontopic, pub_all, journ_all;
        for (auto doc : it->second) {
            const auto& p = index.pubs[doc];
            bool topical = matched_set.count(doc) > 0;
            bool journal = p.venue_kind == VenueKind::journal;
            pub_all.add(p.year);
            (topical ? pub_topic : pub_nontopic).add(p.year);
            if (journal) {
                journ_all.add(p.year);
                (topical ? journ_topic : journ_nontopic).add(p.year);
            }
        }
        int now = index.now_year;
        auto& row = raw[c];
        row[0] = static_cast<double>(pub_topic.count);
        row[1] = static_cast<double>(pub_nontopic.count);
        row[2] = static_cast<double>(journ_topic.count);
        row[3] = static_cast<double>(journ_nontopic.count);
        row[4] = pub_topic.since_first(now);
        row[5] = pub_nontopic.since_first(now);
        row[6] = journ_topic.since_first(now);
        row[7] = journ_nontopic.since_first(now);
        row[8] = pub_topic.since_last(now);
        row[9] = pub_nontopic.since_last(now);
        row[10] = journ_topic.since_last(now);
        row[11] = journ_nontopic.since_last(now);
        row[12] = pub_topic.span();
        row[13] = pub_nontopic.span();
        row[14] = journ_topic.span();
        row[15] = journ_nontopic.span();
        row[16] = pub_all.per_year();
        row[17] = journ_all.per_year();
    }
    return make_event_table(SensorKind::profile, std::move(cands), profile_event_names(),
                            std::move(raw));
}

EventScoreTable extract_citation_events(const Index& index, const Query& q,
                                        const std::vector<std::string>& candidates) {
    auto cands = sorted_candidates(candidates);
    auto matched = match_documents(index, q);
    std::unordered_set<std::uint32_t> matched_set(matched.begin(), matched.end());
    auto ranks = pagerank(index);

    std::vector<std::vector<double>> raw(cands.size(),
                                         std::vector<double>(citation_event_names().size(), 0.0));
    for (std::size_t c = 0; c < cands.size(); ++c) {
        auto it = index.author_pubs.find(cands[c]);
        if (it == index.author_pubs.end()) {
            continue;
        }
        double cites_topic = 0.0, cites_nontopic = 0.0, cites_max = 0.0;
        double per_year_sum = 0.0;
        std::size_t topic_count = 0;
        double pagerank_sum = 0.0;
        std::vector<PaperProfile> profiles;
        profiles.reserve(it->second.size());
        for (auto doc : it->second) {
            const auto& p = index.pubs[doc];
            double cites = static_cast<double>(index.citation_in[doc].size());
            bool topical = matched_set.count(doc) > 0;
            if (topical) {
                cites_topic += cites;
                cites_max = std::max(cites_max, cites);
                per_year_sum += cites / static_cast<double>(index.now_year - p.year + 1);
                ++topic_count;
            } else {
                cites_nontopic += cites;
            }
            pagerank_sum += ranks[doc];

            PaperProfile profile;
            profile.citations = static_cast<int>(cites);
            profile.year = p.year;
            profile.num_authors = static_cast<int>(p.author_ids.size());
            profile.matched = topical;
            for (auto citing : index.citation_in[doc]) {
                profile.citing_years.push_back(index.pubs[citing].year);
            }
            profiles.push_back(std::move(profile));
        }
        auto indices = bibliometric_indices(profiles, index.now_year);
        auto coauthor_it = index.coauthors.find(cands[c]);

        auto& row = raw[c];
        row[0] = cites_topic;
        row[1] = cites_nontopic;
        row[2] = topic_count == 0 ? 0.0 : cites_topic / static_cast<double>(topic_count);
        row[3] = topic_count == 0 ? 0.0 : per_year_sum / static_cast<double>(topic_count);
        row[4] = cites_max;
        row[5] = coauthor_it == index.coauthors.end()
                     ? 0.0
                     : static_cast<double>(coauthor_it->second.size());
        row[6] = indices.h;
        row[7] = indices.h_topic;
        row[8] = indices.h_contemporary;
        row[9] = indices.h_trend;
        row[10] = indices.h_individual;
        row[11] = indices.g;
        row[12] = indices.a;
        row[13] = indices.e;
        row[14] = pagerank_sum;
        row[15] = it->second.empty()
                      ? 0.0
                      : pagerank_sum / static_cast<double>(it->second.size());
    }
    return make_event_table(SensorKind::citation, std::move(cands), citation_event_names(),
                            std::move(raw));
}

}  // namespace expertfind
