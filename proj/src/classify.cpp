#include "bikei/classify.hpp"

#include "bikei/error.hpp"
#include "bikei/gauss.hpp"
#include "bikei/io.hpp"
#include "bikei/iso.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unistd.h>

namespace bikei {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool validName(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '_' &&
            c != '-')
            return false;
    return true;
}

} // namespace

std::vector<CorpusEntry> readCorpus(const std::string& text) {
    std::vector<CorpusEntry> out;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw ParseError("corpus line has no `name:` prefix", lineNo);
        CorpusEntry e;
        e.name = trim(t.substr(0, colon));
        if (!validName(e.name))
            throw ParseError("corpus entry name must be nonempty and use only "
                             "letters, digits, `.`, `_`, `-`",
                             lineNo);
        if (!seen.insert(e.name).second)
            throw ParseError("duplicate corpus entry name: " + e.name, lineNo);
        std::string rest = trim(t.substr(colon + 1));
        if (rest.rfind("@matrix", 0) == 0) {
            e.matrixPath = trim(rest.substr(7));
            if (e.matrixPath.empty())
                throw ParseError("@matrix entry needs a file path", lineNo);
        } else {
            e.code = rest; // empty is fine: a zero-crossing unknot diagram
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CorpusEntry> readCorpusFile(const std::string& path) {
    auto entries = readCorpus(readWholeFile(path));
    auto base = std::filesystem::path(path).parent_path();
    for (auto& e : entries)
        if (!e.matrixPath.empty() && std::filesystem::path(e.matrixPath).is_relative())
            e.matrixPath = (base / e.matrixPath).string();
    return entries;
}

namespace {

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Hash over the fields that determine the completion result.
std::string cacheKey(const PresentationMatrix& m, const EngineConfig& cfg) {
    std::ostringstream key;
    key << writeTable(m) << "maxSize=" << cfg.maxSize << " strategy="
        << (cfg.zeroStrategy == ZeroStrategy::Score ? "score" : "lex")
        << " medial=" << (cfg.medialEnabled ? 1 : 0);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(key.str())));
    return buf;
}

struct CachedRun {
    CompletionStatus status = CompletionStatus::Finite;
    BikeiTable table; // Finite only
    int bound = 0;    // BoundExceeded only
};

bool cacheLoad(const std::string& dir, const std::string& key, CachedRun& out) {
    std::ifstream f(dir + "/" + key + ".txt", std::ios::binary);
    if (!f) return false;
    std::ostringstream ss;
    ss << f.rdbuf();
    std::string text = ss.str();
    size_t nl = text.find('\n');
    if (nl == std::string::npos) return false;
    std::string head = text.substr(0, nl);
    try {
        if (head == "FINITE") {
            out.status = CompletionStatus::Finite;
            out.table = readTableString(text.substr(nl + 1));
            return true;
        }
        std::istringstream hs(head);
        std::string word;
        if (hs >> word >> out.bound && word == "BOUND_EXCEEDED") {
            out.status = CompletionStatus::BoundExceeded;
            return true;
        }
    } catch (const Error&) {
        // fall through: a corrupt cache file is a miss
    }
    return false;
}

void cacheStore(const std::string& dir, const std::string& key, const CachedRun& run) {
    std::filesystem::create_directories(dir);
    std::string final = dir + "/" + key + ".txt";
    std::string tmp = final + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) return; // cache is best-effort; the result is already computed
        if (run.status == CompletionStatus::Finite)
            f << "FINITE\n" << writeTable(run.table);
        else
            f << "BOUND_EXCEEDED " << run.bound << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(tmp, final, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

} // namespace

ClassificationReport classifyCorpus(const std::vector<CorpusEntry>& entries,
                                    const EngineConfig& cfg,
                                    const std::string& cacheDir) {
    ClassificationReport report;
    report.entries.reserve(entries.size());

    for (const auto& e : entries) {
        ClassifiedEntry out;
        out.name = e.name;
        try {
            PresentationMatrix m = e.matrixPath.empty()
                                       ? diagramToPresentation(parseGaussCode(e.code))
                                       : readMatrixFile(e.matrixPath);
            CachedRun run;
            std::string key;
            bool hit = false;
            if (!cacheDir.empty()) {
                key = cacheKey(m, cfg);
                hit = cacheLoad(cacheDir, key, run);
            }
            if (!hit) {
                auto outcome = complete(m, {}, cfg);
                run.status = outcome.status;
                run.bound = outcome.bound;
                if (outcome.status == CompletionStatus::Finite)
                    run.table = std::move(outcome.table);
                if (!cacheDir.empty()) cacheStore(cacheDir, key, run);
            }
            if (run.status == CompletionStatus::Finite) {
                out.status = EntryStatus::Finite;
                out.cardinality = run.table.n;
                out.table = std::move(run.table);
            } else {
                out.status = EntryStatus::BoundExceeded;
            }
        } catch (const Error& err) {
            out.status = EntryStatus::Error;
            out.error = err.what();
        }
        report.entries.push_back(std::move(out));
    }

    // Bucket finite results: profiles first, pairwise isomorphism within a
    // bucket. Class ids run in first-member input order.
    std::map<std::string, std::vector<int>> byProfile;
    std::vector<const BikeiTable*> reps;
    for (auto& e : report.entries) {
        if (e.status != EntryStatus::Finite) continue;
        std::string prof = invariantProfile(e.table);
        int found = 0;
        for (int id : byProfile[prof])
            if (isIsomorphic(*reps[size_t(id) - 1], e.table)) {
                found = id;
                break;
            }
        if (!found) {
            reps.push_back(&e.table);
            found = static_cast<int>(reps.size());
            byProfile[prof].push_back(found);
            ClassGroup g;
            g.classId = found;
            g.cardinality = e.table.n;
            g.representative = e.name;
            report.classes.push_back(std::move(g));
        }
        e.classId = found;
        report.classes[size_t(found) - 1].members.push_back(e.name);
    }
    return report;
}

std::string formatReport(const ClassificationReport& r) {
    std::ostringstream out;
    for (const auto& e : r.entries) {
        out << e.name << '\t';
        switch (e.status) {
        case EntryStatus::Finite:
            out << "FINITE\t" << e.cardinality << '\t' << e.classId;
            break;
        case EntryStatus::BoundExceeded:
            out << "BOUND_EXCEEDED\t-\t-";
            break;
        case EntryStatus::Error:
            out << "ERROR\t-\t-";
            break;
        }
        out << '\n';
    }
    out << "# classes\n";
    for (const auto& g : r.classes) {
        out << "# class " << g.classId << " cardinality=" << g.cardinality
            << " rep=" << g.representative << " members=";
        for (size_t i = 0; i < g.members.size(); ++i)
            out << (i ? "," : "") << g.members[i];
        out << '\n';
    }
    bool anyError = false;
    for (const auto& e : r.entries) anyError |= e.status == EntryStatus::Error;
    if (anyError) {
        out << "# errors\n";
        for (const auto& e : r.entries)
            if (e.status == EntryStatus::Error) out << "# " << e.name << ": " << e.error << '\n';
    }
    return out.str();
}

} // namespace bikei
