#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "expertfind/sensors.hpp"

using namespace expertfind;

namespace {

Publication make_pub(std::string id, std::string title, std::vector<std::string> authors,
                     int year = 2000, std::string venue = "VENUE",
                     VenueKind kind = VenueKind::conference,
                     std::vector<std::string> refs = {}) {
    Publication p;
    p.pub_id = std::move(id);
    p.title = std::move(title);
    p.author_ids = std::move(authors);
    p.year = year;
    p.venue = std::move(venue);
    p.venue_kind = kind;
    p.references = std::move(refs);
    return p;
}

double column_of(const EventScoreTable& table, const std::string& candidate,
                 const std::string& event, bool normalized = false) {
    auto c = std::find(table.candidates.begin(), table.candidates.end(), candidate);
    auto e = std::find(table.events.begin(), table.events.end(), event);
    REQUIRE(c != table.candidates.end());
    REQUIRE(e != table.events.end());
    auto ci = static_cast<std::size_t>(c - table.candidates.begin());
    auto ei = static_cast<std::size_t>(e - table.events.begin());
    return normalized ? table.normalized[ci][ei] : table.raw[ci][ei];
}

std::set<std::string> term_set(const Publication& p) {
    auto tokens = tokenize(p.title + " " + (p.abstract ? *p.abstract : ""));
    return {tokens.begin(), tokens.end()};
}

}  // namespace

TEST_SUITE("sensors") {

TEST_CASE("min_max_normalize reproduces the TF column") {
    auto norm = min_max_normalize({9990, 9202, 9001});
    CHECK(norm[0] == doctest::Approx(1.0000).epsilon(1e-4));
    CHECK(norm[1] == doctest::Approx(0.2032).epsilon(1e-4));
    CHECK(norm[2] == doctest::Approx(0.0000).epsilon(1e-4));
}

TEST_CASE("min_max_normalize maps a constant column to zeros") {
    CHECK(min_max_normalize({5, 5, 5}) == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("min_max_normalize reproduces the BM25 column") {
    auto norm = min_max_normalize({1057, 1064, 939});
    CHECK(norm[0] == doctest::Approx(0.9440).epsilon(1e-4));
    CHECK(norm[1] == doctest::Approx(1.0000).epsilon(1e-4));
    CHECK(norm[2] == doctest::Approx(0.0000).epsilon(1e-4));
}

TEST_CASE("min_max_normalize rejects non-finite values") {
    CHECK_THROWS_AS(min_max_normalize({1.0, std::nan("")}), std::invalid_argument);
    CHECK_THROWS_AS(min_max_normalize({}), std::invalid_argument);
}

TEST_CASE("min_max_normalize preserves the column order") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> column(8);
        for (auto& v : column) {
            v = static_cast<double>(rng() % 1000) / 10.0;
        }
        auto norm = min_max_normalize(column);
        bool degenerate =
            *std::max_element(column.begin(), column.end()) ==
            *std::min_element(column.begin(), column.end());
        if (degenerate) {
            continue;
        }
        for (std::size_t i = 0; i < column.size(); ++i) {
            for (std::size_t j = 0; j < column.size(); ++j) {
                if (column[i] > column[j]) {
                    CHECK(norm[i] > norm[j]);
                }
            }
        }
        CHECK(*std::max_element(norm.begin(), norm.end()) == doctest::Approx(1.0));
        CHECK(*std::min_element(norm.begin(), norm.end()) == doctest::Approx(0.0));
    }
}

TEST_CASE("bm25 is zero without query terms in the document") {
    auto index = build_index({make_pub("p1", "databases", {"a1"})});
    CHECK(bm25(index, make_query("retrieval"), 0) == 0.0);
}

TEST_CASE("bm25 on a single-doc corpus collapses to the idf") {
    auto index = build_index({make_pub("p1", "information retrieval", {"a1"})});
    // tf=1 and len=avglen cancel the saturation term
    CHECK(bm25(index, make_query("information"), 0) ==
          doctest::Approx(bm25_idf(1, 1)).epsilon(1e-12));
}

TEST_CASE("bm25 matches a direct-formula oracle on a small corpus") {
    std::vector<Publication> pubs = {
        make_pub("p1", "expert search expert ranking", {"a1"}),
        make_pub("p2", "expert databases and indexing structures", {"a2"}),
        make_pub("p3", "image analysis", {"a3"}),
    };
    pubs[0].abstract = "methods for expert retrieval";
    auto index = build_index(pubs);
    auto q = make_query("expert retrieval");
    const double k1 = 1.2, b = 0.75;

    // oracle: token counts straight from the records
    std::vector<std::vector<std::string>> docs;
    double total_len = 0;
    for (const auto& p : pubs) {
        docs.push_back(tokenize(p.title + " " + (p.abstract ? *p.abstract : "")));
        total_len += static_cast<double>(docs.back().size());
    }
    double avg_len = total_len / static_cast<double>(docs.size());
    for (std::uint32_t d = 0; d < docs.size(); ++d) {
        double expected = 0.0;
        for (const auto& term : q.terms) {
            double tf = static_cast<double>(std::count(docs[d].begin(), docs[d].end(), term));
            if (tf == 0.0) {
                continue;
            }
            std::size_t df = 0;
            for (const auto& tokens : docs) {
                if (std::count(tokens.begin(), tokens.end(), term) > 0) {
                    ++df;
                }
            }
            double n = static_cast<double>(docs.size());
            double idf = std::log((n - static_cast<double>(df) + 0.5) /
                                      (static_cast<double>(df) + 0.5) +
                                  1.0);
            double len = static_cast<double>(docs[d].size());
            expected += idf * (tf * (k1 + 1.0)) / (tf + k1 * (1.0 - b + b * len / avg_len));
        }
        CHECK(bm25(index, q, d) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("jaccard basics") {
    std::set<std::string> ab{"a", "b"};
    CHECK(jaccard(ab, ab) == 1.0);
    CHECK(jaccard(ab, {"c", "d"}) == 0.0);
    CHECK(jaccard(ab, {"b", "c", "d"}) == doctest::Approx(0.25));
    CHECK(jaccard(ab, {}) == 0.0);
    CHECK_THROWS_AS(jaccard({}, ab), std::invalid_argument);
}

TEST_CASE("citation_count mirrors the inverse reference lists") {
    std::vector<Publication> pubs = {
        make_pub("p1", "cited twice", {"a1"}),
        make_pub("p2", "citing", {"a2"}, 2001, "V", VenueKind::conference, {"p1"}),
        make_pub("p3", "citing too", {"a3"}, 2002, "V", VenueKind::conference, {"p1"}),
        make_pub("p4", "uncited", {"a4"}),
    };
    auto index = build_index(pubs);
    CHECK(citation_count(index, 0) == 2);
    CHECK(citation_count(index, 3) == 0);
    // transpose check: recount from the raw reference lists
    for (std::uint32_t d = 0; d < pubs.size(); ++d) {
        std::uint32_t expected = 0;
        for (const auto& p : pubs) {
            expected += static_cast<std::uint32_t>(
                std::count(p.references.begin(), p.references.end(), pubs[d].pub_id));
        }
        CHECK(citation_count(index, d) == expected);
    }
}

TEST_CASE("h_index examples and exhaustive oracle") {
    CHECK(h_index({}) == 0);
    CHECK(h_index({10, 8, 5, 4, 3}) == 4);
    CHECK(h_index({1, 1, 1}) == 1);

    // oracle: check every h from 0..n directly against the definition
    auto oracle = [](const std::vector<int>& counts) {
        int best = 0;
        for (int h = 0; h <= static_cast<int>(counts.size()); ++h) {
            int have = 0;
            for (int c : counts) {
                if (c >= h) {
                    ++have;
                }
            }
            if (have >= h) {
                best = h;
            }
        }
        return best;
    };
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> counts(rng() % 12);
        for (auto& c : counts) {
            c = static_cast<int>(rng() % 20);
        }
        CHECK(h_index(counts) == oracle(counts));
    }
}

TEST_CASE("a- and e-index over a fixed h-core") {
    // counts (10, 8, 5, 4) give h = 4, core sum 27
    std::vector<PaperProfile> papers;
    for (int c : {10, 8, 5, 4}) {
        papers.push_back({c, 2000, 1, false, {}});
    }
    auto indices = bibliometric_indices(papers, 2005);
    CHECK(indices.h == 4);
    CHECK(indices.a == doctest::Approx(6.75));
    CHECK(indices.e == doctest::Approx(std::sqrt(27.0 - 16.0)).epsilon(1e-4));
}

TEST_CASE("g-index caps at the paper count") {
    std::vector<PaperProfile> papers(3, PaperProfile{1, 2000, 1, false, {}});
    CHECK(bibliometric_indices(papers, 2005).g == 1);  // top-2 sum 2 < 4
}

TEST_CASE("individual h-index collapses for single-author papers") {
    std::vector<PaperProfile> papers;
    for (int c : {5, 4, 3}) {
        papers.push_back({c, 2000, 1, false, {}});
    }
    auto indices = bibliometric_indices(papers, 2005);
    CHECK(indices.h == 3);
    CHECK(indices.h_individual == doctest::Approx(3.0));
}

TEST_CASE("e-index vanishes when every h-core paper has exactly h citations") {
    std::vector<PaperProfile> papers(3, PaperProfile{3, 2000, 1, false, {}});
    auto indices = bibliometric_indices(papers, 2005);
    CHECK(indices.h == 3);
    CHECK(indices.e == doctest::Approx(0.0));
}

TEST_CASE("query-conditioned h-index never exceeds the unconditioned one") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<PaperProfile> papers(1 + rng() % 15);
        for (auto& p : papers) {
            p.citations = static_cast<int>(rng() % 30);
            p.year = 1990 + static_cast<int>(rng() % 16);
            p.num_authors = 1 + static_cast<int>(rng() % 4);
            p.matched = (rng() & 1) == 0;
        }
        auto indices = bibliometric_indices(papers, 2006);
        CHECK(indices.h_topic <= indices.h);
        CHECK(indices.h <= indices.g);
    }
}

TEST_CASE("the index wrapper matches the profile-based core") {
    std::vector<Publication> pubs = {
        make_pub("w1", "expert topics", {"a1", "a2"}, 2000, "J", VenueKind::journal),
        make_pub("w2", "expert methods", {"a1"}, 2002, "C", VenueKind::conference),
        make_pub("w3", "citing one", {"a3"}, 2003, "C", VenueKind::conference, {"w1"}),
        make_pub("w4", "citing both", {"a3"}, 2004, "C", VenueKind::conference, {"w1", "w2"}),
    };
    auto index = build_index(pubs);
    auto q = make_query("expert");
    auto got = bibliometric_indices(index, "a1", q);

    std::vector<PaperProfile> profiles = {
        {2, 2000, 2, true, {2003, 2004}},
        {1, 2002, 1, true, {2004}},
    };
    auto want = bibliometric_indices(profiles, index.now_year);
    CHECK(got.h == want.h);
    CHECK(got.h_topic == want.h_topic);
    CHECK(got.h_contemporary == want.h_contemporary);
    CHECK(got.h_trend == want.h_trend);
    CHECK(got.g == want.g);
    CHECK(got.a == doctest::Approx(want.a));
    CHECK(got.e == doctest::Approx(want.e));
    CHECK(got.h_individual == doctest::Approx(want.h_individual));
    CHECK_THROWS_AS(bibliometric_indices(index, "nobody", q), std::invalid_argument);
}

TEST_CASE("empty and uncited profiles score zero everywhere") {
    CHECK(bibliometric_indices(std::vector<PaperProfile>{}, 2005).h == 0);
    std::vector<PaperProfile> uncited(4, PaperProfile{0, 2000, 2, true, {}});
    auto indices = bibliometric_indices(uncited, 2005);
    CHECK(indices.h == 0);
    CHECK(indices.g == 0);
    CHECK(indices.a == 0.0);
    CHECK(indices.e == 0.0);
    CHECK(indices.h_individual == 0.0);
    CHECK(indices.h_contemporary == 0);
    CHECK(indices.h_trend == 0);
}

TEST_CASE("pagerank of a two-node cycle is exactly one half each") {
    auto index = build_index({
        make_pub("p1", "a", {"x"}, 2000, "V", VenueKind::conference, {"p2"}),
        make_pub("p2", "b", {"y"}, 2000, "V", VenueKind::conference, {"p1"}),
    });
    auto ranks = pagerank(index);
    CHECK(ranks[0] == 0.5);
    CHECK(ranks[1] == 0.5);
}

TEST_CASE("pagerank of a single node is one") {
    auto index = build_index({make_pub("p1", "a", {"x"})});
    auto ranks = pagerank(index);
    CHECK(ranks[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pagerank matches a dense fixed-point oracle on a toy graph") {
    //   p1 -> p2, p1 -> p3, p2 -> p3, p3 -> p1, p4 dangling
    auto index = build_index({
        make_pub("p1", "a", {"w"}, 2000, "V", VenueKind::conference, {"p2", "p3"}),
        make_pub("p2", "b", {"x"}, 2000, "V", VenueKind::conference, {"p3"}),
        make_pub("p3", "c", {"y"}, 2000, "V", VenueKind::conference, {"p1"}),
        make_pub("p4", "d", {"z"}),
    });
    auto ranks = pagerank(index);

    // oracle: dense transition matrix iterated to a fixed point
    const int n = 4;
    const double d = 0.85;
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    auto link = [&](int from, int to, double weight) { m[to][from] = weight; };
    link(0, 1, 0.5);
    link(0, 2, 0.5);
    link(1, 2, 1.0);
    link(2, 0, 1.0);
    for (int to = 0; to < n; ++to) {
        m[to][3] = 1.0 / n;  // dangling column spreads uniformly
    }
    std::vector<double> v(n, 1.0 / n);
    for (int iter = 0; iter < 10000; ++iter) {
        std::vector<double> next(n, (1.0 - d) / n);
        for (int to = 0; to < n; ++to) {
            for (int from = 0; from < n; ++from) {
                next[to] += d * m[to][from] * v[from];
            }
        }
        v.swap(next);
    }
    for (int i = 0; i < n; ++i) {
        CHECK(ranks[i] == doctest::Approx(v[i]).epsilon(1e-6));
    }
    double total = 0.0;
    for (double r : ranks) {
        CHECK(r >= 0.0);
        total += r;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pagerank validates the damping factor") {
    auto index = build_index({make_pub("p1", "a", {"x"})});
    PageRankOptions options;
    options.damping = 1.5;
    CHECK_THROWS_AS(pagerank(index, options), std::invalid_argument);
}

TEST_CASE("extract_text_events zeroes candidates without matched documents") {
    auto index = build_index({
        make_pub("p1", "expert search", {"a1"}),
        make_pub("p2", "databases", {"a2"}),
    });
    auto table = extract_text_events(index, make_query("expert"), {"a1", "a2"});
    for (const auto& event : table.events) {
        CHECK(column_of(table, "a2", event) == 0.0);
    }
    CHECK(column_of(table, "a1", "text.tf") > 0.0);
}

TEST_CASE("extract_text_events matches a per-document oracle") {
    std::vector<Publication> pubs = {
        make_pub("p1", "expert search", {"alice", "bob"}, 2000, "SIGIR", VenueKind::conference),
        make_pub("p2", "expert databases", {"alice"}, 2002, "TODS", VenueKind::journal),
        make_pub("p3", "image processing", {"bob"}, 2003, "SIGIR", VenueKind::conference),
        make_pub("p4", "search engines", {"carol"}, 2001, "WWW", VenueKind::conference),
    };
    pubs[0].abstract = "expert ranking methods";
    pubs[3].abstract = "expert search engines on the web";
    auto index = build_index(pubs);
    auto q = make_query("expert search");
    auto table = extract_text_events(index, q, {"alice", "bob", "carol"});

    auto doc_tokens = [&](const Publication& p) {
        return tokenize(p.title + " " + (p.abstract ? *p.abstract : ""));
    };
    auto contains_query_term = [&](const Publication& p) {
        auto terms = term_set(p);
        return std::any_of(q.terms.begin(), q.terms.end(),
                           [&](const std::string& t) { return terms.count(t) > 0; });
    };

    std::map<std::string, std::vector<std::size_t>> matched_docs_of;
    for (std::size_t d = 0; d < pubs.size(); ++d) {
        if (!contains_query_term(pubs[d])) {
            continue;
        }
        for (const auto& a : pubs[d].author_ids) {
            matched_docs_of[a].push_back(d);
        }
    }
    REQUIRE(matched_docs_of["alice"].size() == 2);
    REQUIRE(matched_docs_of["bob"].size() == 1);
    REQUIRE(matched_docs_of["carol"].size() == 1);

    for (const auto& [candidate, docs] : matched_docs_of) {
        double tf_sum = 0.0, len_sum = 0.0;
        std::set<std::string> other_authors;
        double bm25_sum = 0.0, bm25_max = 0.0, jac_sum = 0.0, jac_max = 0.0;
        std::set<std::string> present_terms;
        for (auto d : docs) {
            auto tokens = doc_tokens(pubs[d]);
            for (const auto& t : q.terms) {
                tf_sum += static_cast<double>(std::count(tokens.begin(), tokens.end(), t));
                if (std::count(tokens.begin(), tokens.end(), t) > 0) {
                    present_terms.insert(t);
                }
            }
            len_sum += static_cast<double>(tokens.size());
            for (const auto& a : pubs[d].author_ids) {
                if (a != candidate) {
                    other_authors.insert(a);
                }
            }
            double doc_bm25 = bm25(index, q, static_cast<std::uint32_t>(d));
            bm25_sum += doc_bm25;
            bm25_max = std::max(bm25_max, doc_bm25);
            std::set<std::string> qset(q.terms.begin(), q.terms.end());
            double doc_jac = jaccard(qset, term_set(pubs[d]));
            jac_sum += doc_jac;
            jac_max = std::max(jac_max, doc_jac);
        }
        double idf_sum = 0.0;
        for (const auto& t : present_terms) {
            std::size_t df = 0;
            for (const auto& p : pubs) {
                df += term_set(p).count(t);
            }
            idf_sum += bm25_idf(pubs.size(), df);
        }
        double count = static_cast<double>(docs.size());
        CHECK(column_of(table, candidate, "text.tf") == doctest::Approx(tf_sum));
        CHECK(column_of(table, candidate, "text.idf") == doctest::Approx(idf_sum));
        CHECK(column_of(table, candidate, "text.doc_len") == doctest::Approx(len_sum / count));
        CHECK(column_of(table, candidate, "text.unique_authors") ==
              doctest::Approx(static_cast<double>(other_authors.size())));
        CHECK(column_of(table, candidate, "text.bm25.sum") == doctest::Approx(bm25_sum));
        CHECK(column_of(table, candidate, "text.bm25.avg") ==
              doctest::Approx(bm25_sum / count));
        CHECK(column_of(table, candidate, "text.bm25.max") == doctest::Approx(bm25_max));
        CHECK(column_of(table, candidate, "text.jaccard.sum") == doctest::Approx(jac_sum));
        CHECK(column_of(table, candidate, "text.jaccard.avg") ==
              doctest::Approx(jac_sum / count));
        CHECK(column_of(table, candidate, "text.jaccard.max") == doctest::Approx(jac_max));
    }
}

TEST_CASE("extract_text_events scores venue pseudo-documents") {
    std::vector<Publication> pubs = {
        make_pub("p1", "expert search", {"alice"}, 2000, "SIGIR", VenueKind::conference),
        make_pub("p2", "expert profiles", {"alice"}, 2001, "SIGIR", VenueKind::conference),
        make_pub("p3", "expert models", {"bob"}, 2002, "TOIS", VenueKind::journal),
        make_pub("p4", "off topic work", {"alice"}, 2003, "KDD", VenueKind::conference),
    };
    auto index = build_index(pubs);
    auto q = make_query("expert");
    auto table = extract_text_events(index, q, {"alice", "bob"});

    // venue pseudo corpus from matched docs: SIGIR = p1+p2, TOIS = p3
    // alice published in SIGIR and KDD (conferences); KDD has no matched text
    std::map<std::string, std::vector<std::string>> venue_tokens;
    for (const auto& p : pubs) {
        if (term_set(p).count("expert")) {
            auto toks = tokenize(p.title);
            auto& bag = venue_tokens[p.venue];
            bag.insert(bag.end(), toks.begin(), toks.end());
        }
    }
    REQUIRE(venue_tokens.size() == 2);
    double avg_len = 0.0;
    for (const auto& [venue, toks] : venue_tokens) {
        avg_len += static_cast<double>(toks.size());
    }
    avg_len /= static_cast<double>(venue_tokens.size());
    auto venue_bm25 = [&](const std::string& venue) {
        const auto& toks = venue_tokens.at(venue);
        double tf = static_cast<double>(std::count(toks.begin(), toks.end(), "expert"));
        std::size_t df = 0;
        for (const auto& [name, bag] : venue_tokens) {
            if (std::count(bag.begin(), bag.end(), "expert") > 0) {
                ++df;
            }
        }
        return bm25_term_score(bm25_idf(venue_tokens.size(), df), tf,
                               static_cast<double>(toks.size()), avg_len);
    };

    double sigir = venue_bm25("SIGIR");
    // alice: conference venues {KDD, SIGIR}; KDD scores 0
    CHECK(column_of(table, "alice", "text.bm25_conf.sum") == doctest::Approx(sigir));
    CHECK(column_of(table, "alice", "text.bm25_conf.avg") == doctest::Approx(sigir / 2.0));
    CHECK(column_of(table, "alice", "text.bm25_conf.max") == doctest::Approx(sigir));
    CHECK(column_of(table, "alice", "text.bm25_journ.sum") == 0.0);
    // bob: journal venue {TOIS}
    double tois = venue_bm25("TOIS");
    CHECK(column_of(table, "bob", "text.bm25_journ.sum") == doctest::Approx(tois));
    CHECK(column_of(table, "bob", "text.bm25_conf.sum") == 0.0);
    // jaccard of SIGIR pseudo doc: terms {expert, search, profiles}, query {expert}
    CHECK(column_of(table, "alice", "text.jaccard_conf.max") == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("extract_profile_events computes the career arithmetic") {
    std::vector<Publication> pubs = {
        make_pub("p1", "expert topics", {"a1"}, 2000, "J1", VenueKind::journal),
        make_pub("p2", "expert methods", {"a1"}, 2004, "C1", VenueKind::conference),
        make_pub("p3", "latest work", {"a2"}, 2006, "C1", VenueKind::conference),
    };
    auto index = build_index(pubs);  // now_year = 2006
    auto q = make_query("expert");
    auto table = extract_profile_events(index, q, {"a1", "a2"});

    CHECK(column_of(table, "a1", "profile.pubs_topic") == 2.0);
    CHECK(column_of(table, "a1", "profile.pubs_nontopic") == 0.0);
    CHECK(column_of(table, "a1", "profile.journ_topic") == 1.0);
    CHECK(column_of(table, "a1", "profile.years_since_first_pub_topic") == 6.0);
    CHECK(column_of(table, "a1", "profile.years_since_last_pub_topic") == 2.0);
    CHECK(column_of(table, "a1", "profile.span_pub_topic") == 4.0);
    CHECK(column_of(table, "a1", "profile.pubs_per_year") == doctest::Approx(2.0 / 5.0));
    // journals: single 2000 paper
    CHECK(column_of(table, "a1", "profile.span_journ_topic") == 0.0);
    CHECK(column_of(table, "a1", "profile.journ_per_year") == doctest::Approx(1.0 / 1.0));

    // a2: one publication, off topic
    CHECK(column_of(table, "a2", "profile.pubs_topic") == 0.0);
    CHECK(column_of(table, "a2", "profile.pubs_nontopic") == 1.0);
    CHECK(column_of(table, "a2", "profile.span_pub_nontopic") == 0.0);
    CHECK(column_of(table, "a2", "profile.pubs_per_year") == doctest::Approx(1.0));
    CHECK(column_of(table, "a2", "profile.journ_per_year") == 0.0);
}

TEST_CASE("extract_citation_events matches a hand enumeration") {
    std::vector<Publication> pubs = {
        make_pub("c1", "expert systems", {"x"}, 1998, "JX", VenueKind::journal),
        make_pub("c2", "expert methods", {"x", "y"}, 2000, "CX", VenueKind::conference),
        make_pub("c3", "other topic", {"y"}, 2001, "CX", VenueKind::conference, {"c1"}),
        make_pub("c4", "different things", {"z"}, 2003, "CZ", VenueKind::conference,
                 {"c1", "c2"}),
    };
    auto index = build_index(pubs);  // now_year 2003, matched = {c1, c2}
    auto q = make_query("expert");
    auto table = extract_citation_events(index, q, {"x", "y", "z"});

    CHECK(column_of(table, "x", "citation.cites_topic") == 3.0);     // 2 + 1
    CHECK(column_of(table, "x", "citation.cites_nontopic") == 0.0);
    CHECK(column_of(table, "x", "citation.cites_topic.avg") == doctest::Approx(1.5));
    // c1: 2/(2003-1998+1), c2: 1/(2003-2000+1), averaged
    CHECK(column_of(table, "x", "citation.cites_per_year.avg") ==
          doctest::Approx((2.0 / 6.0 + 1.0 / 4.0) / 2.0));
    CHECK(column_of(table, "x", "citation.cites_topic.max") == 2.0);
    CHECK(column_of(table, "x", "citation.collaborators") == 1.0);  // y
    CHECK(column_of(table, "x", "citation.h_index") == 1.0);        // counts [2,1]
    CHECK(column_of(table, "x", "citation.h_index_topic") == 1.0);
    CHECK(column_of(table, "x", "citation.g_index") == 1.0);  // top-1 sum 2 >= 1, top-2 sum 3 < 4

    // y: c2 matched (1 citation), c3 unmatched (0 citations)
    CHECK(column_of(table, "y", "citation.cites_topic") == 1.0);
    CHECK(column_of(table, "y", "citation.cites_nontopic") == 0.0);
    CHECK(column_of(table, "y", "citation.collaborators") == 1.0);  // x

    // z: c4 unmatched and uncited
    CHECK(column_of(table, "z", "citation.cites_topic") == 0.0);
    CHECK(column_of(table, "z", "citation.cites_nontopic") == 0.0);
    CHECK(column_of(table, "z", "citation.h_index") == 0.0);

    // pagerank columns aggregate the per-document scores
    auto ranks = pagerank(index);
    CHECK(column_of(table, "x", "citation.pagerank.sum") ==
          doctest::Approx(ranks[0] + ranks[1]));
    CHECK(column_of(table, "x", "citation.pagerank.avg") ==
          doctest::Approx((ranks[0] + ranks[1]) / 2.0));
    CHECK(column_of(table, "z", "citation.pagerank.sum") == doctest::Approx(ranks[3]));
}

TEST_CASE("adding a citation never decreases the count columns") {
    std::vector<Publication> pubs = {
        make_pub("c1", "expert systems", {"x"}, 1998, "JX", VenueKind::journal),
        make_pub("c2", "expert methods", {"x"}, 2000, "CX", VenueKind::conference),
        make_pub("c3", "follow-up", {"y"}, 2001, "CX", VenueKind::conference, {"c1"}),
    };
    auto q = make_query("expert");
    auto before = extract_citation_events(build_index(pubs), q, {"x"});
    pubs.push_back(make_pub("c4", "more citations", {"z"}, 2003, "CZ", VenueKind::conference,
                            {"c1", "c2"}));
    auto after = extract_citation_events(build_index(pubs), q, {"x"});
    for (const char* event : {"citation.cites_topic", "citation.cites_nontopic",
                              "citation.cites_topic.max", "citation.h_index",
                              "citation.g_index"}) {
        CHECK(column_of(after, "x", event) >= column_of(before, "x", event));
    }
}

TEST_CASE("event tables are deterministically ordered and normalized") {
    auto index = build_index({
        make_pub("p1", "expert search", {"b", "a"}),
        make_pub("p2", "expert models", {"c"}),
    });
    auto q = make_query("expert");
    auto table = extract_text_events(index, q, {"c", "b", "a"});
    CHECK(table.candidates == std::vector<std::string>{"a", "b", "c"});
    CHECK(table.events == text_event_names());
    for (const auto& row : table.normalized) {
        for (double v : row) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
    CHECK_THROWS_AS(extract_text_events(index, q, {}), std::invalid_argument);
}

}  // TEST_SUITE
