#include "expertfind/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

namespace expertfind {

namespace {

const std::unordered_set<std::string>& stopwords() {
    static const std::unordered_set<std::string> words = {
        "a",    "an",   "and",  "are",   "as",    "at",   "be",   "but",
        "by",   "for",  "if",   "in",    "into",  "is",   "it",   "no",
        "not",  "of",   "on",   "or",    "such",  "that", "the",  "their",
        "then", "there", "these", "they", "this",  "to",   "was",  "will",
        "with"};
    return words;
}

void flush_token(std::string& cur, std::vector<std::string>& out) {
    if (cur.size() >= 2 && stopwords().count(cur) == 0) {
        out.push_back(cur);
    }
    cur.clear();
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char ch : text) {
        if (std::isalnum(ch)) {
            cur.push_back(static_cast<char>(std::tolower(ch)));
        } else if (!cur.empty()) {
            flush_token(cur, out);
        }
    }
    if (!cur.empty()) {
        flush_token(cur, out);
    }
    return out;
}

Query make_query(const std::string& raw) {
    Query q;
    q.raw = raw;
    std::unordered_set<std::string> seen;
    for (auto& term : tokenize(raw)) {
        if (seen.insert(term).second) {
            q.terms.push_back(std::move(term));
        }
    }
    if (q.terms.empty()) {
        throw std::invalid_argument("query has no usable terms: \"" + raw + "\"");
    }
    return q;
}

namespace {

using nlohmann::json;

[[noreturn]] void bad_line(std::size_t lineno, const std::string& what) {
    throw CorpusError("corpus line " + std::to_string(lineno) + ": " + what);
}

std::string require_string(const json& j, const char* field, std::size_t lineno) {
    auto it = j.find(field);
    if (it == j.end() || !it->is_string()) {
        bad_line(lineno, std::string("missing or non-string field '") + field + "'");
    }
    return it->get<std::string>();
}

Publication parse_record(const json& j, std::size_t lineno) {
    if (!j.is_object()) {
        bad_line(lineno, "record is not a JSON object");
    }
    Publication p;
    p.pub_id = require_string(j, "pub_id", lineno);
    if (p.pub_id.empty()) {
        bad_line(lineno, "empty pub_id");
    }
    p.title = require_string(j, "title", lineno);

    auto abs_it = j.find("abstract");
    if (abs_it == j.end()) {
        bad_line(lineno, "missing field 'abstract'");
    }
    if (abs_it->is_string()) {
        p.abstract = abs_it->get<std::string>();
    } else if (!abs_it->is_null()) {
        bad_line(lineno, "field 'abstract' must be a string or null");
    }

    auto authors_it = j.find("authors");
    if (authors_it == j.end() || !authors_it->is_array() || authors_it->empty()) {
        bad_line(lineno, "field 'authors' must be a nonempty array");
    }
    std::unordered_set<std::string> seen_authors;
    for (const auto& a : *authors_it) {
        if (!a.is_string()) {
            bad_line(lineno, "field 'authors' must contain strings");
        }
        auto id = a.get<std::string>();
        if (id.empty()) {
            bad_line(lineno, "empty author id");
        }
        if (!seen_authors.insert(id).second) {
            bad_line(lineno, "duplicate author '" + id + "' in one record");
        }
        p.author_ids.push_back(std::move(id));
    }

    auto year_it = j.find("year");
    if (year_it == j.end() || !year_it->is_number_integer()) {
        bad_line(lineno, "field 'year' must be an integer");
    }
    p.year = year_it->get<int>();
    if (p.year <= 0) {
        bad_line(lineno, "field 'year' must be positive");
    }

    p.venue = require_string(j, "venue", lineno);
    auto kind = require_string(j, "venue_kind", lineno);
    if (kind == "conference") {
        p.venue_kind = VenueKind::conference;
    } else if (kind == "journal") {
        p.venue_kind = VenueKind::journal;
    } else {
        bad_line(lineno, "venue_kind must be \"conference\" or \"journal\", got \"" + kind + "\"");
    }

    auto refs_it = j.find("references");
    if (refs_it == j.end() || !refs_it->is_array()) {
        bad_line(lineno, "field 'references' must be an array");
    }
    for (const auto& r : *refs_it) {
        if (!r.is_string()) {
            bad_line(lineno, "field 'references' must contain strings");
        }
        p.references.push_back(r.get<std::string>());
    }
    return p;
}

}  // namespace

LoadResult load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw CorpusError("cannot open corpus file: " + path);
    }
    LoadResult result;
    std::unordered_set<std::string> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            bad_line(lineno, std::string("invalid JSON (") + e.what() + ")");
        }
        Publication p = parse_record(j, lineno);
        if (!ids.insert(p.pub_id).second) {
            bad_line(lineno, "duplicate pub_id '" + p.pub_id + "'");
        }
        // Self-citation links are invalid by construction; drop them here.
        auto before = p.references.size();
        std::erase(p.references, p.pub_id);
        result.self_links_dropped += before - p.references.size();
        result.pubs.push_back(std::move(p));
    }
    for (const auto& p : result.pubs) {
        for (const auto& r : p.references) {
            if (ids.count(r) == 0) {
                ++result.dangling_references;
            }
        }
    }
    return result;
}

Index build_index(std::vector<Publication> pubs) {
    if (pubs.empty()) {
        throw std::invalid_argument("cannot build an index from an empty corpus");
    }
    Index idx;
    idx.pubs = std::move(pubs);
    idx.num_docs = idx.pubs.size();
    idx.doc_len.resize(idx.num_docs, 0);
    idx.distinct_terms.resize(idx.num_docs, 0);
    idx.citation_in.resize(idx.num_docs);
    idx.citation_out.resize(idx.num_docs);

    for (std::uint32_t i = 0; i < idx.num_docs; ++i) {
        const auto& p = idx.pubs[i];
        idx.pub_pos.emplace(p.pub_id, i);
        idx.now_year = std::max(idx.now_year, p.year);
    }

    std::uint64_t total_len = 0;
    for (std::uint32_t i = 0; i < idx.num_docs; ++i) {
        const auto& p = idx.pubs[i];
        std::string text = p.title;
        if (p.abstract) {
            text += ' ';
            text += *p.abstract;
        }
        std::map<std::string, std::uint32_t> tf;
        for (auto& tok : tokenize(text)) {
            ++tf[tok];
        }
        std::uint32_t len = 0;
        for (auto& [term, count] : tf) {
            idx.postings[term].push_back({i, count});
            len += count;
        }
        idx.doc_len[i] = len;
        idx.distinct_terms[i] = static_cast<std::uint32_t>(tf.size());
        total_len += len;

        for (const auto& a : p.author_ids) {
            idx.author_pubs[a].push_back(i);
            for (const auto& b : p.author_ids) {
                if (b != a) {
                    idx.coauthors[a].insert(b);
                }
            }
        }

        for (const auto& r : p.references) {
            auto it = idx.pub_pos.find(r);
            if (it == idx.pub_pos.end() || it->second == i) {
                continue;  // dangling or self reference: not a graph edge
            }
            idx.citation_out[i].push_back(it->second);
            idx.citation_in[it->second].push_back(i);
        }
    }
    idx.avg_doc_len = static_cast<double>(total_len) / static_cast<double>(idx.num_docs);
    return idx;
}

std::vector<std::uint32_t> match_documents(const Index& index, const Query& q) {
    std::set<std::uint32_t> hits;
    for (const auto& term : q.terms) {
        auto it = index.postings.find(term);
        if (it == index.postings.end()) {
            continue;
        }
        for (const auto& post : it->second) {
            hits.insert(post.doc);
        }
    }
    return {hits.begin(), hits.end()};
}

std::vector<std::string> candidates_for_query(const Index& index, const Query& q) {
    std::set<std::string> authors;
    for (auto doc : match_documents(index, q)) {
        for (const auto& a : index.pubs[doc].author_ids) {
            authors.insert(a);
        }
    }
    return {authors.begin(), authors.end()};
}

}  // namespace expertfind
