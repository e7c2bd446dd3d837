#pragma once

#include "bikei/engine.hpp"
#include "bikei/table.hpp"

#include <string>
#include <vector>

namespace bikei {

// One corpus line: a named diagram, or a named presentation matrix pulled
// from a separate file.
struct CorpusEntry {
    std::string name;
    std::string code;       // Gauss code; empty iff matrixPath is set
    std::string matrixPath; // set by `name: @matrix <path>` lines
};

// Corpus format, one entry per line: `name: <gauss code>` or
// `name: @matrix <path>`. `#` starts a comment line; blank lines are
// skipped. Names must be unique and colon-free.
std::vector<CorpusEntry> readCorpus(const std::string& text);

// Same, resolving relative @matrix paths against the corpus file's parent
// directory.
std::vector<CorpusEntry> readCorpusFile(const std::string& path);

enum class EntryStatus { Finite, BoundExceeded, Error };

struct ClassifiedEntry {
    std::string name;
    EntryStatus status = EntryStatus::Error;
    int cardinality = 0; // Finite only
    int classId = 0;     // Finite only, 1-based in first-seen order
    std::string error;   // Error only
    BikeiTable table;    // Finite only
};

struct ClassGroup {
    int classId = 0;
    int cardinality = 0;
    std::string representative; // first member in input order; its table
                                // stands for the class
    std::vector<std::string> members;
};

struct ClassificationReport {
    std::vector<ClassifiedEntry> entries; // input order
    std::vector<ClassGroup> classes;      // ascending classId
};

// Runs every entry through diagram -> presentation -> completion and
// buckets the finite results into isomorphism classes (invariantProfile
// prefilter, pairwise isIsomorphic within a bucket). Entries are
// independent and reported in input order; per-entry parse or engine
// errors are recorded and do not abort the batch. cacheDir, when
// nonempty, caches completion results keyed by a content hash of the
// presentation matrix and the config.
ClassificationReport classifyCorpus(const std::vector<CorpusEntry>& entries,
                                    const EngineConfig& cfg,
                                    const std::string& cacheDir = "");

// Line-oriented rendering: `name<TAB>status<TAB>cardinality<TAB>classId`
// per entry (`-` for fields that do not apply), then a `# classes`
// section, then a `# errors` section when any entry failed. Byte-stable
// for fixed input and config.
std::string formatReport(const ClassificationReport& r);

} // namespace bikei
