#include "expertfind/index_io.hpp"

#include <cstdint>
#include <fstream>

namespace expertfind {

namespace {

constexpr char kMagic[4] = {'E', 'F', 'I', 'X'};
constexpr std::uint32_t kVersion = 1;

void write_u32(std::ostream& out, std::uint32_t v) {
    char buf[4];
    for (int i = 0; i < 4; ++i) {
        buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    }
    out.write(buf, 4);
}

void write_u64(std::ostream& out, std::uint64_t v) {
    char buf[8];
    for (int i = 0; i < 8; ++i) {
        buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    }
    out.write(buf, 8);
}

void write_str(std::ostream& out, const std::string& s) {
    write_u64(out, s.size());
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint32_t read_u32(std::istream& in) {
    unsigned char buf[4];
    in.read(reinterpret_cast<char*>(buf), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        v |= static_cast<std::uint32_t>(buf[i]) << (8 * i);
    }
    return v;
}

std::uint64_t read_u64(std::istream& in) {
    unsigned char buf[8];
    in.read(reinterpret_cast<char*>(buf), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    }
    return v;
}

std::string read_str(std::istream& in) {
    auto len = read_u64(in);
    std::string s(len, '\0');
    in.read(s.data(), static_cast<std::streamsize>(len));
    return s;
}

}  // namespace

void save_corpus_artifact(const std::string& path, const LoadResult& corpus) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write index artifact: " + path);
    }
    out.write(kMagic, 4);
    write_u32(out, kVersion);
    write_u64(out, corpus.pubs.size());
    for (const auto& p : corpus.pubs) {
        write_str(out, p.pub_id);
        write_str(out, p.title);
        out.put(p.abstract ? 1 : 0);
        if (p.abstract) {
            write_str(out, *p.abstract);
        }
        write_u64(out, p.author_ids.size());
        for (const auto& a : p.author_ids) {
            write_str(out, a);
        }
        write_u32(out, static_cast<std::uint32_t>(p.year));
        write_str(out, p.venue);
        out.put(p.venue_kind == VenueKind::journal ? 1 : 0);
        write_u64(out, p.references.size());
        for (const auto& r : p.references) {
            write_str(out, r);
        }
    }
    write_u64(out, corpus.self_links_dropped);
    write_u64(out, corpus.dangling_references);
    if (!out) {
        throw std::runtime_error("failed writing index artifact: " + path);
    }
}

LoadResult load_corpus_artifact(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open index artifact: " + path);
    }
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string_view(magic, 4) != std::string_view(kMagic, 4)) {
        throw std::runtime_error("not an index artifact: " + path);
    }
    auto version = read_u32(in);
    if (version != kVersion) {
        throw std::runtime_error("unsupported index artifact version " +
                                 std::to_string(version) + ": " + path);
    }
    LoadResult corpus;
    auto count = read_u64(in);
    corpus.pubs.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Publication p;
        p.pub_id = read_str(in);
        p.title = read_str(in);
        if (in.get() == 1) {
            p.abstract = read_str(in);
        }
        auto n_authors = read_u64(in);
        for (std::uint64_t a = 0; a < n_authors; ++a) {
            p.author_ids.push_back(read_str(in));
        }
        p.year = static_cast<int>(read_u32(in));
        p.venue = read_str(in);
        p.venue_kind = in.get() == 1 ? VenueKind::journal : VenueKind::conference;
        auto n_refs = read_u64(in);
        for (std::uint64_t r = 0; r < n_refs; ++r) {
            p.references.push_back(read_str(in));
        }
        corpus.pubs.push_back(std::move(p));
    }
    corpus.self_links_dropped = read_u64(in);
    corpus.dangling_references = read_u64(in);
    if (!in) {
        throw std::runtime_error("truncated index artifact: " + path);
    }
    return corpus;
}

}  // namespace expertfind
