#include "doctest.h"

#include "bikei/engine.hpp"
#include "bikei/error.hpp"
#include "bikei/gauss.hpp"
#include "bikei/io.hpp"
#include "bikei/iso.hpp"
#include "bikei/presentation.hpp"

#include <random>
#include <sstream>

using namespace bikei;

namespace {

BikeiTable flip2() {
    BikeiTable t(2);
    for (int r = 1; r <= 2; ++r)
        for (int c = 1; c <= 2; ++c) t.under(r, c) = t.over(r, c) = 3 - r;
    return t;
}

PresentationMatrix unknot1() { return PresentationMatrix(1); }

PresentationMatrix secondUnknot() {
    return readMatrixString(
        "4\n"
        "3 0 0 0 2 0 0 0\n"
        "0 0 4 0 0 0 0 0\n"
        "0 0 0 0 0 4 0 0\n"
        "0 0 0 0 0 0 0 0\n");
}

PresentationMatrix virtualTrefoil() {
    return readMatrixString(
        "4\n"
        "0 0 2 0 0 3 0 0\n"
        "4 0 0 0 0 0 0 0\n"
        "0 0 0 0 4 0 0 0\n"
        "0 0 0 0 0 0 0 0\n");
}

PresentationMatrix knot471() {
    return readMatrixString(
        "8\n"
        "0 0 0 0 8 0 0 0 0 0 0 2 0 0 0 0\n"
        "0 0 0 0 0 0 0 0 0 0 1 0 0 3 0 0\n"
        "0 4 0 0 0 0 0 0 0 0 0 0 0 0 2 0\n"
        "3 0 0 0 0 0 5 0 0 0 0 0 0 0 0 0\n"
        "0 0 0 0 0 0 0 4 6 0 0 0 0 0 0 0\n"
        "0 7 0 0 0 0 0 0 0 0 0 0 0 0 0 5\n"
        "0 0 6 0 0 0 0 0 0 0 0 0 8 0 0 0\n"
        "0 0 0 0 0 1 0 0 0 0 0 0 7 0 0 0\n");
}

EngineConfig lexCfg() {
    EngineConfig cfg;
    cfg.zeroStrategy = ZeroStrategy::Lex;
    return cfg;
}

} // namespace

TEST_CASE("unknot completes to the two element table") {
    for (auto strat : {ZeroStrategy::Score, ZeroStrategy::Lex}) {
        EngineConfig cfg;
        cfg.zeroStrategy = strat;
        auto out = complete(unknot1(), {}, cfg);
        REQUIRE(out.status == CompletionStatus::Finite);
        CHECK(out.finalSize == 2);
        CHECK(out.table == flip2());
        CHECK(out.adjoinCount == 1);
        REQUIRE(out.generatorImage.size() == 2);
        CHECK(out.generatorImage[1] == 1);
    }
}

TEST_CASE("one propagation pass on the second unknot enqueues the merge") {
    PresentationMatrix m = secondUnknot();
    EquivalenceTracker tr(4);
    EngineConfig cfg;
    long long fills = 0;
    bool changed = propagateOnce(m, tr, cfg, nullptr, &fills);
    CHECK(changed);
    CHECK(fills > 0);
    REQUIRE(tr.hasPending());
    // axiom (i) on row 1: under(1,1)=3 and over(1,1)=2 name one generator
    bool found32 = false;
    for (auto [a, b] : tr.pending())
        found32 |= (a == 3 && b == 2) || (a == 2 && b == 3);
    CHECK(found32);
}

TEST_CASE("reduce renumbers and keeps the smaller index") {
    PresentationMatrix m = secondUnknot();
    EquivalenceTracker tr(4);
    tr.enqueue(3, 2);
    auto remap = reduce(m, tr);
    REQUIRE(remap.size() == 5);
    CHECK(remap[1] == 1);
    CHECK(remap[2] == 2);
    CHECK(remap[3] == 2);
    CHECK(remap[4] == 3);
    CHECK(writeTable(m) ==
          "3\n"
          "2 0 0 2 0 0\n"
          "0 3 0 0 3 0\n"
          "0 0 0 0 0 0\n");
    CHECK(!tr.hasPending());
}

TEST_CASE("completion of the second unknot records the merge in the trace") {
    EngineConfig cfg = lexCfg();
    cfg.traceEnabled = true;
    auto out = complete(secondUnknot(), {}, cfg);
    REQUIRE(out.status == CompletionStatus::Finite);
    CHECK(out.finalSize == 2);
    CHECK(isIsomorphic(out.table, flip2()).has_value());
    bool merged32 = false;
    for (const auto& e : out.trace)
        if (e.kind == TraceEvent::Kind::Merge)
            merged32 |= (e.a == 3 && e.b == 2) || (e.a == 2 && e.b == 3);
    CHECK(merged32);
    // generator images agree with the merge: x3 and x2 map to one element
    REQUIRE(out.generatorImage.size() == 5);
    CHECK(out.generatorImage[2] == out.generatorImage[3]);
}

TEST_CASE("virtual trefoil matrix completes to the unknot bikei") {
    auto out = complete(virtualTrefoil(), {}, {});
    REQUIRE(out.status == CompletionStatus::Finite);
    CHECK(out.finalSize == 2);
    CHECK(isIsomorphic(out.table, flip2()).has_value());
}

TEST_CASE("eight generator input completes to six elements") {
    for (auto strat : {ZeroStrategy::Score, ZeroStrategy::Lex}) {
        EngineConfig cfg;
        cfg.zeroStrategy = strat;
        auto out = complete(knot471(), {}, cfg);
        REQUIRE(out.status == CompletionStatus::Finite);
        CHECK(out.finalSize == 6);
        CHECK(checkBikeiAxioms(out.table).empty());
        CHECK(checkMedial(out.table).empty());
    }
}

TEST_CASE("zero scores: lookahead fill counts") {
    EngineConfig cfg;

    auto one = scoreZeros(unknot1(), cfg);
    REQUIRE(one.size() == 2);
    CHECK(one[0].score == 7);
    CHECK(one[1].score == 7);

    auto scored = scoreZeros(virtualTrefoil(), cfg);
    REQUIRE(scored.size() == 28);
    long long best = 0, sum = 0;
    ScoredZero argmax{};
    for (const auto& z : scored) {
        sum += z.score;
        if (z.score > best) {
            best = z.score;
            argmax = z;
        }
    }
    CHECK(best == 45);
    CHECK(sum == 878);
    CHECK(argmax.block == Block::Under);
    CHECK(argmax.row == 2);
    CHECK(argmax.col == 2);
}

TEST_CASE("scoreZeros requires a zero cell") {
    PresentationMatrix m = toMatrix(flip2());
    CHECK_THROWS_AS(scoreZeros(m, EngineConfig{}), InvalidParameters);
    CHECK_THROWS_AS(scoreZerosFast(m, EngineConfig{}), InvalidParameters);
}

TEST_CASE("fast scorer matches the reference scorer") {
    EngineConfig cfg;
    auto sameScores = [&](const PresentationMatrix& m) {
        auto slow = scoreZeros(m, cfg);
        auto fast = scoreZerosFast(m, cfg);
        REQUIRE(slow.size() == fast.size());
        for (size_t i = 0; i < slow.size(); ++i) {
            CHECK(slow[i].block == fast[i].block);
            CHECK(slow[i].row == fast[i].row);
            CHECK(slow[i].col == fast[i].col);
            CHECK(slow[i].score == fast[i].score);
        }
    };

    sameScores(unknot1());
    sameScores(secondUnknot());
    sameScores(virtualTrefoil());
    sameScores(knot471());
    sameScores(diagramToPresentation(parseGaussCode("O1+;U1+")));

    // mid-completion states, including unstable ones
    PresentationMatrix m = knot471();
    EquivalenceTracker tr(m.n);
    adjoinGenerator(m, cfg);
    sameScores(m);
    tr.reset(m.n);
    propagateOnce(m, tr, cfg);
    if (!m.isComplete()) sameScores(m);

    // random partial matrices
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng() % 6);
        PresentationMatrix r(n);
        for (Block b : {Block::Under, Block::Over})
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (rng() % 3 == 0) r.cell(b, i, j) = 1 + int(rng() % n);
        if (r.zeroCells().empty()) r.under(1, 1) = 0;
        sameScores(r);
    }

    cfg.medialEnabled = false;
    sameScores(virtualTrefoil());
    sameScores(knot471());
}

TEST_CASE("lex adjoin picks the first zero") {
    PresentationMatrix m = virtualTrefoil();
    auto zeros = m.zeroCells();
    REQUIRE(!zeros.empty());
    auto first = zeros.front();
    EngineConfig cfg = lexCfg();
    cfg.traceEnabled = true;
    std::vector<TraceEvent> trace;
    adjoinGenerator(m, cfg, &trace);
    CHECK(m.n == 5);
    CHECK(m.cell(first.first, first.second.first, first.second.second) == 5);
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].kind == TraceEvent::Kind::Adjoin);
    CHECK(trace[0].block == first.first);
}

TEST_CASE("score adjoin takes the measured best cell") {
    PresentationMatrix m = virtualTrefoil();
    adjoinGenerator(m, EngineConfig{});
    CHECK(m.n == 5);
    CHECK(m.under(2, 2) == 5);
}

TEST_CASE("trace format round trips and replays") {
    EngineConfig cfg = lexCfg();
    cfg.traceEnabled = true;
    for (PresentationMatrix input :
         {unknot1(), virtualTrefoil(), secondUnknot(), knot471()}) {
        auto out = complete(input, {}, cfg);
        REQUIRE(out.status == CompletionStatus::Finite);
        auto parsed = parseTrace(formatTrace(out.trace));
        REQUIRE(parsed.size() == out.trace.size());
        for (size_t i = 0; i < parsed.size(); ++i) CHECK(parsed[i] == out.trace[i]);

        PresentationMatrix replayed = replayTrace(input, out.trace);
        CHECK(replayed.isComplete());
        CHECK(toCompleteTable(replayed) == out.table);
    }
}

TEST_CASE("trace text is line oriented") {
    std::vector<TraceEvent> events = {
        TraceEvent::adjoin(Block::Under, 1, 1),
        TraceEvent::fill(Block::Over, 1, 2, 2),
        TraceEvent::merge(3, 2),
    };
    CHECK(formatTrace(events) == "ADJOIN U 1 1\nFILL O 1 2 2\nMERGE 3 2\n");
    CHECK_THROWS_AS(parseTrace("FILL X 1 2 2\n"), ParseError);
    CHECK_THROWS_AS(parseTrace("FILL U 1 2\n"), ParseError);
    CHECK_THROWS_AS(parseTrace("NOPE 1 2\n"), ParseError);
}

TEST_CASE("strategies agree up to isomorphism") {
    for (PresentationMatrix input :
         {virtualTrefoil(), secondUnknot(), knot471(),
          diagramToPresentation(parseGaussCode("O1+;U1+"))}) {
        auto s = complete(input, {}, {});
        auto l = complete(input, {}, lexCfg());
        REQUIRE(s.status == CompletionStatus::Finite);
        REQUIRE(l.status == CompletionStatus::Finite);
        CHECK(s.finalSize == l.finalSize);
        CHECK(isIsomorphic(s.table, l.table).has_value());
    }
}

TEST_CASE("seed merges apply before any propagation") {
    // merging the two generators of the free rank 2 presentation leaves the
    // free rank 1 presentation, which is the unknot
    PresentationMatrix free2(2);
    auto out = complete(free2, {{1, 2}}, {});
    REQUIRE(out.status == CompletionStatus::Finite);
    CHECK(out.finalSize == 2);
    CHECK(out.table == flip2());
    REQUIRE(out.generatorImage.size() == 3);
    CHECK(out.generatorImage[1] == out.generatorImage[2]);
}

TEST_CASE("free rank 2 presentation exceeds any bound") {
    PresentationMatrix free2(2);

    EngineConfig small;
    small.maxSize = 20;
    auto s = complete(free2, {}, small);
    CHECK(s.status == CompletionStatus::BoundExceeded);
    CHECK(s.bound == 20);

    EngineConfig lex = lexCfg();
    lex.maxSize = 200;
    auto l = complete(free2, {}, lex);
    CHECK(l.status == CompletionStatus::BoundExceeded);
    CHECK(l.bound == 200);
}

TEST_CASE("bound accounting at the boundary") {
    EngineConfig cap1;
    cap1.maxSize = 1;
    auto blocked = complete(unknot1(), {}, cap1);
    CHECK(blocked.status == CompletionStatus::BoundExceeded);
    CHECK(blocked.bound == 1);

    EngineConfig cap2;
    cap2.maxSize = 2;
    auto fits = complete(unknot1(), {}, cap2);
    CHECK(fits.status == CompletionStatus::Finite);
    CHECK(fits.finalSize == 2);
}

TEST_CASE("plain bikei mode still completes the unknot") {
    EngineConfig cfg;
    cfg.medialEnabled = false;
    auto out = complete(unknot1(), {}, cfg);
    REQUIRE(out.status == CompletionStatus::Finite);
    CHECK(out.table == flip2());
}

TEST_CASE("classical trefoil has eighteen elements") {
    PresentationMatrix m =
        diagramToPresentation(parseGaussCode("O1+U2+O3+U1+O2+U3+"));
    auto out = complete(m, {}, {});
    REQUIRE(out.status == CompletionStatus::Finite);
    CHECK(out.finalSize == 18);
    CHECK(checkBikeiAxioms(out.table).empty());
    CHECK(checkMedial(out.table).empty());
}
