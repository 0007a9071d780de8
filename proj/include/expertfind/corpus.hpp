#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace expertfind {

enum class VenueKind { conference, journal };

struct Publication {
    std::string pub_id;
    std::string title;
    std::optional<std::string> abstract;
    std::vector<std::string> author_ids;
    int year = 0;
    std::string venue;
    VenueKind venue_kind = VenueKind::conference;
    std::vector<std::string> references;
};

/// Normalized query: lowercased tokens with stopwords and duplicates removed,
/// first-occurrence order preserved.
struct Query {
    std::string raw;
    std::vector<std::string> terms;
};

struct LoadResult {
    std::vector<Publication> pubs;
    std::size_t self_links_dropped = 0;
    std::size_t dangling_references = 0;
};

/// Raised for unreadable or malformed corpus files; messages carry the
/// offending line number where one exists.
class CorpusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Posting {
    std::uint32_t doc = 0;
    std::uint32_t tf = 0;
};

/// Write-once view over a loaded corpus. build_index fills every member and
/// nothing mutates an Index afterwards, so query-time readers may share one
/// instance across threads without coordination.
struct Index {
    std::vector<Publication> pubs;                                // corpus order
    std::unordered_map<std::string, std::uint32_t> pub_pos;      // pub_id -> position in pubs
    std::unordered_map<std::string, std::vector<Posting>> postings;  // term -> docs, ascending doc
    std::vector<std::uint32_t> doc_len;                           // tokens per doc (title+abstract)
    std::vector<std::uint32_t> distinct_terms;                    // distinct tokens per doc
    double avg_doc_len = 0.0;
    std::size_t num_docs = 0;
    std::map<std::string, std::vector<std::uint32_t>> author_pubs;   // author -> docs, ascending
    std::vector<std::vector<std::uint32_t>> citation_in;          // doc -> citing docs
    std::vector<std::vector<std::uint32_t>> citation_out;         // doc -> cited docs (non-dangling)
    std::map<std::string, std::set<std::string>> coauthors;       // author -> distinct collaborators
    int now_year = 0;                                             // max publication year
};

/// Lowercases, splits on non-alphanumeric bytes, drops tokens shorter than
/// two characters and a fixed English stopword list. Idempotent on its own
/// output.
std::vector<std::string> tokenize(const std::string& text);

/// Tokenizes and deduplicates a raw query. Throws std::invalid_argument when
/// nothing usable remains.
Query make_query(const std::string& raw);

/// Reads a line-delimited JSON corpus. Self-citation links are dropped from
/// the record (counted), references to unknown pub_ids stay in the record but
/// are counted as dangling. Throws CorpusError on malformed lines or
/// duplicate pub_ids.
LoadResult load_corpus(const std::string& path);

/// Builds the immutable index over title+abstract text. Throws
/// std::invalid_argument for an empty collection.
Index build_index(std::vector<Publication> pubs);

/// Documents containing at least one query term, ascending doc position.
std::vector<std::uint32_t> match_documents(const Index& index, const Query& q);

/// Union of authors over the matched documents, sorted by id.
std::vector<std::string> candidates_for_query(const Index& index, const Query& q);

}  // namespace expertfind
