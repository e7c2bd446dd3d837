// Timing driver for the completion engine on a few built-in inputs.
// Usage: bench_engine <name> [--lex] [--cap N] [--plain] [--table] [--trace]
//   names: unknot vtref vtref4 trefoil fig8 hopf k471 free2

#include "bikei/engine.hpp"
#include "bikei/error.hpp"
#include "bikei/gauss.hpp"
#include "bikei/io.hpp"
#include "bikei/table.hpp"

#include <chrono>
#include <fstream>
#include <cstring>
#include <iostream>
#include <string>

using namespace bikei;

namespace {

PresentationMatrix fromGauss(const std::string& code) {
    return diagramToPresentation(parseGaussCode(code));
}

PresentationMatrix k471() {
    PresentationMatrix m(8);
    m.under(1, 5) = 8;
    m.under(3, 2) = 4;
    m.under(4, 1) = 3;
    m.under(4, 7) = 5;
    m.under(5, 8) = 4;
    m.under(6, 2) = 7;
    m.under(7, 3) = 6;
    m.under(8, 6) = 1;
    m.over(1, 4) = 2;
    m.over(2, 3) = 1;
    m.over(2, 6) = 3;
    m.over(3, 7) = 2;
    m.over(5, 1) = 6;
    m.over(6, 8) = 5;
    m.over(7, 4) = 8;
    m.over(8, 5) = 7;
    return m;
}

PresentationMatrix vtref4() {
    PresentationMatrix m(4);
    m.under(1, 3) = 2;
    m.over(3, 1) = 4;
    m.over(1, 2) = 3;
    m.under(2, 1) = 4;
    return m;
}

void dumpRelations(const PresentationMatrix& m) {
    for (int b = 0; b < 2; ++b)
        for (int r = 1; r <= m.n; ++r)
            for (int c = 1; c <= m.n; ++c) {
                int v = m.cell(static_cast<Block>(b), r, c);
                if (v) {
                    std::cout << (b == 0 ? "u" : "o") << '[' << r << "][" << c
                              << "]=" << v << '\n';
                }
            }
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: bench_engine <name> [--lex] [--cap N] [--plain]"
                     " [--table] [--trace]\n";
        return 1;
    }
    std::string name = argv[1];
    EngineConfig cfg;
    bool showTable = false;
    bool steps = false;
    bool fastcheck = false;
    bool faststeps = false;
    bool scoreOnly = false;
    int probeAt = 0;
    for (int i = 2; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--steps")) steps = true;
        else if (!std::strcmp(argv[i], "--fastcheck")) fastcheck = true;
        else if (!std::strcmp(argv[i], "--faststeps")) faststeps = true;
        else if (!std::strcmp(argv[i], "--scoreonly")) scoreOnly = true;
        else if (!std::strcmp(argv[i], "--probe") && i + 1 < argc) probeAt = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--lex")) cfg.zeroStrategy = ZeroStrategy::Lex;
        else if (!std::strcmp(argv[i], "--cap") && i + 1 < argc) cfg.maxSize = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--plain")) cfg.medialEnabled = false;
        else if (!std::strcmp(argv[i], "--table")) showTable = true;
        else if (!std::strcmp(argv[i], "--trace")) cfg.traceEnabled = true;
        else {
            std::cerr << "unknown option " << argv[i] << '\n';
            return 1;
        }
    }

    PresentationMatrix m;
    if (name == "unknot") m = fromGauss("");
    else if (name == "vtref") m = fromGauss("U1+U2+O1+O2+");
    else if (name == "vtref4") m = vtref4();
    else if (name == "trefoil") m = fromGauss("O1+U2+O3+U1+O2+U3+");
    else if (name == "fig8") m = fromGauss("O1+U2+O3-U4-O2+U1+O4-U3-");
    else if (name == "hopf") m = fromGauss("O1+;U1+");
    else if (name == "k471") m = k471();
    else if (name == "free2") m = PresentationMatrix(2);
    else if (name.rfind("g:", 0) == 0) m = fromGauss(name.substr(2));
    else if (name.rfind("m:", 0) == 0) m = readMatrixFile(name.substr(2));
    else {
        std::cerr << "unknown input " << name << '\n';
        return 1;
    }

    std::cout << "input n=" << m.n << " relations:\n";
    dumpRelations(m);

    if (probeAt > 0) {
        // grow to probeAt with fast-scored picks, dump the matrix, then
        // time one sweep and both scorers at that state
        EquivalenceTracker tr(m.n);
        for (;;) {
            for (;;) {
                bool changed = propagateOnce(m, tr, cfg);
                if (tr.hasPending()) reduce(m, tr);
                if (!changed) break;
            }
            if (m.isComplete() || m.n >= probeAt) break;
            auto scored = scoreZerosFast(m, cfg);
            const ScoredZero* best = &scored.front();
            for (const auto& s : scored)
                if (s.score > best->score) best = &s;
            PresentationMatrix big(m.n + 1);
            for (int b = 0; b < 2; ++b)
                for (int r = 1; r <= m.n; ++r)
                    for (int c = 1; c <= m.n; ++c)
                        big.cell(static_cast<Block>(b), r, c) =
                            m.cell(static_cast<Block>(b), r, c);
            big.cell(best->block, best->row, best->col) = big.n;
            m = std::move(big);
            tr.reset(m.n);
        }
        int known = 0;
        for (int b = 0; b < 2; ++b)
            for (int r = 1; r <= m.n; ++r)
                for (int c = 1; c <= m.n; ++c)
                    if (m.cell(static_cast<Block>(b), r, c)) ++known;
        std::cout << "probe n=" << m.n << " zeros=" << m.zeroCells().size()
                  << " known=" << known << "\n";
        {
            std::ofstream f("/tmp/probe.mat");
            f << writeTable(m);
        }
        auto time1 = [&](bool medial) {
            PresentationMatrix c2 = m;
            EngineConfig c = cfg;
            c.medialEnabled = medial;
            EquivalenceTracker t2(c2.n);
            auto a = std::chrono::steady_clock::now();
            propagateOnce(c2, t2, c);
            auto b = std::chrono::steady_clock::now();
            return std::chrono::duration<double>(b - a).count();
        };
        std::cout << "sweep full=" << time1(true) << "s plain=" << time1(false) << "s\n";
        auto a = std::chrono::steady_clock::now();
        auto fc = scoreZerosFast(m, cfg);
        auto b = std::chrono::steady_clock::now();
        long long bestF = 0;
        for (auto& s : fc) bestF = std::max(bestF, s.score);
        std::cout << "scoreZerosFast t=" << std::chrono::duration<double>(b - a).count()
                  << "s zeros=" << fc.size() << " best=" << bestF << "\n";
        a = std::chrono::steady_clock::now();
        auto sc = scoreZeros(m, cfg);
        b = std::chrono::steady_clock::now();
        long long best = 0;
        for (auto& s : sc) best = std::max(best, s.score);
        std::cout << "scoreZeros t=" << std::chrono::duration<double>(b - a).count()
                  << "s zeros=" << sc.size() << " best=" << best << "\n";
        return 0;
    }

    if (scoreOnly) {
        auto a = std::chrono::steady_clock::now();
        auto fc = scoreZerosFast(m, cfg);
        auto b = std::chrono::steady_clock::now();
        long long best = 0, sum = 0;
        long long h[5] = {0, 0, 0, 0, 0}; // <5, <15, <40, <100, rest
        for (auto& s : fc) {
            best = std::max(best, s.score);
            sum += s.score;
            int bin = s.score < 5 ? 0 : s.score < 15 ? 1 : s.score < 40 ? 2
                      : s.score < 100 ? 3 : 4;
            ++h[bin];
        }
        std::cout << "scoreZerosFast t=" << std::chrono::duration<double>(b - a).count()
                  << "s zeros=" << fc.size() << " best=" << best << " sum=" << sum
                  << " hist(<5,<15,<40,<100,>=100)=" << h[0] << ',' << h[1] << ',' << h[2]
                  << ',' << h[3] << ',' << h[4] << "\n";
        return 0;
    }

    if (fastcheck) {
        // compare scoreZeros and scoreZerosFast at every stable state along
        // the best-score completion trajectory
        EquivalenceTracker tr(m.n);
        long long states = 0, cells = 0;
        for (;;) {
            for (;;) {
                bool changed = propagateOnce(m, tr, cfg);
                if (tr.hasPending()) reduce(m, tr);
                if (!changed) break;
            }
            if (m.isComplete() || m.n >= cfg.maxSize) break;
            auto slow = scoreZeros(m, cfg);
            auto fast = scoreZerosFast(m, cfg);
            if (slow.size() != fast.size()) {
                std::cout << "MISMATCH n=" << m.n << " count slow=" << slow.size()
                          << " fast=" << fast.size() << "\n";
                return 2;
            }
            for (size_t i = 0; i < slow.size(); ++i) {
                if (slow[i].block != fast[i].block || slow[i].row != fast[i].row ||
                    slow[i].col != fast[i].col || slow[i].score != fast[i].score) {
                    std::cout << "MISMATCH n=" << m.n << " zero#" << i << " at "
                              << (slow[i].block == Block::Under ? 'U' : 'O')
                              << slow[i].row << ',' << slow[i].col
                              << " slow=" << slow[i].score << " fast=" << fast[i].score
                              << "\n";
                    return 2;
                }
            }
            ++states;
            cells += static_cast<long long>(slow.size());
            const ScoredZero* best = &slow.front();
            for (const auto& s : slow)
                if (s.score > best->score) best = &s;
            PresentationMatrix big(m.n + 1);
            for (int b = 0; b < 2; ++b)
                for (int r = 1; r <= m.n; ++r)
                    for (int c = 1; c <= m.n; ++c)
                        big.cell(static_cast<Block>(b), r, c) =
                            m.cell(static_cast<Block>(b), r, c);
            big.cell(best->block, best->row, best->col) = big.n;
            m = std::move(big);
            tr.reset(m.n);
        }
        std::cout << "FASTCHECK OK states=" << states << " scored=" << cells
                  << " final n=" << m.n << "\n";
        return 0;
    }

    if (faststeps) {
        // like --steps but selecting via scoreZerosFast, with scoring time
        EquivalenceTracker tr(m.n);
        auto t0 = std::chrono::steady_clock::now();
        auto secs = [&] {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        };
        int adjoins = 0;
        for (;;) {
            for (;;) {
                bool changed = propagateOnce(m, tr, cfg);
                if (tr.hasPending()) reduce(m, tr);
                if (!changed) break;
            }
            if (m.isComplete()) {
                std::cout << "FINITE n=" << m.n << " adjoins=" << adjoins << " t=" << secs()
                          << "s\n";
                return 0;
            }
            if (m.n >= cfg.maxSize) {
                std::cout << "BOUND_EXCEEDED n=" << m.n << " adjoins=" << adjoins
                          << " t=" << secs() << "s\n";
                return 0;
            }
            auto s0 = std::chrono::steady_clock::now();
            auto scored = scoreZerosFast(m, cfg);
            double scoreSecs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count();
            const ScoredZero* best = &scored.front();
            for (const auto& s : scored)
                if (s.score > best->score) best = &s;
            std::cout << "adjoin#" << adjoins << ": n=" << m.n << " zeros=" << scored.size()
                      << " best=" << best->score << " score_t=" << scoreSecs
                      << "s t=" << secs() << "s" << std::endl;
            PresentationMatrix big(m.n + 1);
            for (int b = 0; b < 2; ++b)
                for (int r = 1; r <= m.n; ++r)
                    for (int c = 1; c <= m.n; ++c)
                        big.cell(static_cast<Block>(b), r, c) =
                            m.cell(static_cast<Block>(b), r, c);
            big.cell(best->block, best->row, best->col) = big.n;
            m = std::move(big);
            tr.reset(m.n);
            ++adjoins;
        }
    }

    if (steps) {
        // complete() reimplemented with per-adjoin logging
        EquivalenceTracker tr(m.n);
        auto t0 = std::chrono::steady_clock::now();
        auto secs = [&] {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        };
        int adjoins = 0;
        for (;;) {
            for (;;) {
                bool changed = propagateOnce(m, tr, cfg);
                if (tr.hasPending()) reduce(m, tr);
                if (!changed) break;
            }
            if (m.isComplete()) {
                std::cout << "FINITE n=" << m.n << " adjoins=" << adjoins << " t=" << secs()
                          << "s\n";
                return 0;
            }
            if (m.n >= cfg.maxSize) {
                std::cout << "BOUND_EXCEEDED n=" << m.n << " adjoins=" << adjoins
                          << " t=" << secs() << "s\n";
                return 0;
            }
            std::cout << "adjoin#" << adjoins << ": n=" << m.n
                      << " zeros=" << m.zeroCells().size() << " t=" << secs() << "s"
                      << std::endl;
            adjoinGenerator(m, cfg);
            tr.reset(m.n);
            ++adjoins;
        }
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        CompletionOutcome out = complete(m, {}, cfg);
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        std::cout << (out.status == CompletionStatus::Finite ? "FINITE" : "BOUND_EXCEEDED")
                  << " n=" << out.finalSize << " adjoins=" << out.adjoinCount
                  << " t=" << secs << "s\n";
        if (showTable && out.status == CompletionStatus::Finite)
            std::cout << writeTable(out.table);
        if (cfg.traceEnabled) std::cout << "trace:\n" << formatTrace(out.trace);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
