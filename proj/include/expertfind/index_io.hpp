#pragma once

#include <string>

#include "expertfind/corpus.hpp"

namespace expertfind {

/// Versioned binary artifact holding the normalized publication records and
/// load counters. Internal format; only the corpus and qrels text formats
/// are stability-guaranteed. Writing the same corpus twice produces
/// byte-identical files.
void save_corpus_artifact(const std::string& path, const LoadResult& corpus);

LoadResult load_corpus_artifact(const std::string& path);

}  // namespace expertfind
