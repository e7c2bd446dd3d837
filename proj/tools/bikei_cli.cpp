// Command-line front end: complete presentations, compute the invariant
// from Gauss codes, compare and verify tables, classify corpora.
// Exit codes: 0 success, 1 input error, 2 bound exceeded, 3 negative
// mathematical result.

#include "CLI11.hpp"

#include "bikei/classify.hpp"
#include "bikei/engine.hpp"
#include "bikei/error.hpp"
#include "bikei/gauss.hpp"
#include "bikei/io.hpp"
#include "bikei/iso.hpp"
#include "bikei/table.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct Options {
    int maxSize = 500;
    std::string strategy = "score";
    bool plainBikei = false;
    std::string traceFile;
};

bikei::EngineConfig toConfig(const Options& o) {
    bikei::EngineConfig cfg;
    cfg.maxSize = o.maxSize;
    cfg.zeroStrategy =
        o.strategy == "lex" ? bikei::ZeroStrategy::Lex : bikei::ZeroStrategy::Score;
    cfg.medialEnabled = !o.plainBikei;
    cfg.traceEnabled = !o.traceFile.empty();
    return cfg;
}

void writeFileOrThrow(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw bikei::Error("cannot write file: " + path);
    f << text;
}

// Shared tail of `complete` and `knot`.
int finishRun(const bikei::PresentationMatrix& m,
              const std::vector<std::pair<int, int>>& seeds, const Options& opt) {
    auto cfg = toConfig(opt);
    auto out = bikei::complete(m, seeds, cfg);
    if (!opt.traceFile.empty())
        writeFileOrThrow(opt.traceFile, bikei::formatTrace(out.trace));
    if (out.status == bikei::CompletionStatus::BoundExceeded) {
        std::cout << "exceeded bound " << out.bound << "\n";
        return 2;
    }
    std::cout << "n=" << out.finalSize << "\n" << bikei::writeTable(out.table);
    return 0;
}

std::string formatViolation(const bikei::AxiomViolation& v) {
    std::ostringstream s;
    s << "(" << v.axiomId << ") witness";
    for (int w : v.witness) s << " " << w;
    s << ": " << v.lhs << " != " << v.rhs;
    return s.str();
}

int cmdComplete(const std::string& file, const Options& opt) {
    return finishRun(bikei::readMatrixFile(file), {}, opt);
}

int cmdKnot(const std::string& codeOrFile, const Options& opt) {
    std::string code = codeOrFile;
    if (std::filesystem::is_regular_file(codeOrFile))
        code = bikei::readWholeFile(codeOrFile);
    auto d = bikei::parseGaussCode(code);
    return finishRun(bikei::diagramToPresentation(d), {}, opt);
}

int cmdIso(const std::string& fileA, const std::string& fileB) {
    auto a = bikei::readTableFile(fileA);
    auto b = bikei::readTableFile(fileB);
    auto iso = bikei::isIsomorphic(a, b);
    if (!iso) {
        std::cout << "not isomorphic\n";
        return 3;
    }
    for (size_t i = 0; i < iso->map.size(); ++i)
        std::cout << (i ? " " : "") << iso->map[i];
    std::cout << "\n";
    return 0;
}

int cmdVerify(const std::string& file, bool medial) {
    auto t = bikei::readTableFile(file);
    auto violations = bikei::checkBikeiAxioms(t);
    if (medial) {
        auto mv = bikei::checkMedial(t);
        violations.insert(violations.end(), mv.begin(), mv.end());
    }
    if (violations.empty()) return 0;
    for (const auto& v : violations) std::cout << formatViolation(v) << "\n";
    return 3;
}

int cmdClassify(const std::string& corpusFile, std::string outFile,
                const std::string& cacheDir, const Options& opt) {
    auto entries = bikei::readCorpusFile(corpusFile);
    auto report = bikei::classifyCorpus(entries, toConfig(opt), cacheDir);
    if (outFile.empty()) outFile = corpusFile + ".report";
    writeFileOrThrow(outFile, bikei::formatReport(report));

    int finite = 0, bound = 0, failed = 0;
    for (const auto& e : report.entries) {
        finite += e.status == bikei::EntryStatus::Finite;
        bound += e.status == bikei::EntryStatus::BoundExceeded;
        failed += e.status == bikei::EntryStatus::Error;
    }
    std::cout << report.entries.size() << " entries: " << finite << " finite, "
              << bound << " bound exceeded, " << failed << " errors; "
              << report.classes.size() << " classes\n"
              << "report written to " << outFile << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fundamental medial bikei of virtual knots and links"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--max-size", opt.maxSize, "completion size bound")
        ->default_val(500);
    app.add_option("--zero-strategy", opt.strategy, "zero selection: score or lex")
        ->check(CLI::IsMember({"score", "lex"}))
        ->default_val("score");
    app.add_flag("--plain-bikei", opt.plainBikei,
                 "drop the medial axioms from propagation and verification");
    app.add_option("--trace", opt.traceFile, "write the completion event log here");

    std::string matrixFile, codeOrFile, fileA, fileB, tableFile;
    std::string corpusFile, reportFile, cacheDir;
    bool medial = false;

    auto* cComplete = app.add_subcommand("complete", "complete a presentation matrix");
    cComplete->add_option("matrix", matrixFile, "presentation matrix file")->required();

    auto* cKnot = app.add_subcommand("knot", "invariant of a signed Gauss code");
    cKnot->add_option("code", codeOrFile, "Gauss code string or file")->required();

    auto* cIso = app.add_subcommand("iso", "isomorphism test for two tables");
    cIso->add_option("tableA", fileA, "first table file")->required();
    cIso->add_option("tableB", fileB, "second table file")->required();

    auto* cVerify = app.add_subcommand("verify", "axiom check for a table");
    cVerify->add_option("table", tableFile, "table file")->required();
    cVerify->add_flag("--medial", medial, "also check the medial axioms");

    auto* cClassify = app.add_subcommand("classify", "classify a corpus of inputs");
    cClassify->add_option("corpus", corpusFile, "corpus file")->required();
    cClassify->add_option("-o,--output", reportFile,
                          "report path (default: <corpus>.report)");
    cClassify->add_option("--cache", cacheDir, "directory for completed-run cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cComplete->parsed()) return cmdComplete(matrixFile, opt);
        if (cKnot->parsed()) return cmdKnot(codeOrFile, opt);
        if (cIso->parsed()) return cmdIso(fileA, fileB);
        if (cVerify->parsed()) return cmdVerify(tableFile, medial);
        if (cClassify->parsed())
            return cmdClassify(corpusFile, reportFile, cacheDir, opt);
    } catch (const bikei::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
