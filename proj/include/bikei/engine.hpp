#pragma once

#include "bikei/table.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bikei {

enum class ZeroStrategy { Score, Lex };

struct EngineConfig {
    int maxSize = 500;
    ZeroStrategy zeroStrategy = ZeroStrategy::Score;
    bool traceEnabled = false;
    bool medialEnabled = true;
};

struct TraceEvent {
    enum class Kind { Fill, Merge, Adjoin };
    Kind kind = Kind::Fill;
    Block block = Block::Under; // Fill, Adjoin
    int row = 0, col = 0;       // Fill, Adjoin
    int value = 0;              // Fill
    int a = 0, b = 0;           // Merge

    static TraceEvent fill(Block b, int r, int c, int v) {
        return {Kind::Fill, b, r, c, v, 0, 0};
    }
    static TraceEvent merge(int a, int b) {
        return {Kind::Merge, Block::Under, 0, 0, 0, a, b};
    }
    static TraceEvent adjoin(Block b, int r, int c) {
        return {Kind::Adjoin, b, r, c, 0, 0, 0};
    }
    bool operator==(const TraceEvent& o) const {
        return kind == o.kind && block == o.block && row == o.row && col == o.col &&
               value == o.value && a == o.a && b == o.b;
    }
};

// One event per line: `FILL <U|O> row col value`, `MERGE a b`,
// `ADJOIN <U|O> row col`.
std::string formatTrace(const std::vector<TraceEvent>& trace);
std::vector<TraceEvent> parseTrace(const std::string& text);

// Union-find over current generator indices plus the queue of merges found
// but not yet applied to the matrix.
class EquivalenceTracker {
public:
    explicit EquivalenceTracker(int n) { reset(n); }
    void reset(int n);
    int find(int a);
    // Records that a and b denote one generator. True iff this was new
    // information (previously distinct classes).
    bool enqueue(int a, int b);
    bool hasPending() const { return !pending_.empty(); }
    const std::vector<std::pair<int, int>>& pending() const { return pending_; }

private:
    std::vector<int> parent_;
    std::vector<std::pair<int, int>> pending_;
};

enum class CompletionStatus { Finite, BoundExceeded };

struct CompletionOutcome {
    CompletionStatus status = CompletionStatus::Finite;
    BikeiTable table;  // meaningful iff status == Finite
    int finalSize = 0;
    int bound = 0;
    std::vector<TraceEvent> trace;   // populated iff traceEnabled
    std::vector<int> generatorImage; // input generator i -> final index, [0] unused
    int adjoinCount = 0;
};

// One deterministic sweep over all axiom instantiations, axioms in fixed
// order, indices ascending lexicographically. Fills forced cells in place,
// enqueues merges for value conflicts; the sweep sees its own fills.
// Returns true iff a cell was filled or a merge newly enqueued.
// fillCount, when given, is incremented once per filled cell.
bool propagateOnce(PresentationMatrix& m, EquivalenceTracker& tr, const EngineConfig& cfg,
                   std::vector<TraceEvent>* trace = nullptr,
                   long long* fillCount = nullptr);

// Applies pending merges to a fixpoint: smaller index survives, larger row
// and column are merged in and the matrix is renumbered; disagreeing merged
// cells enqueue follow-up merges. Returns the old-index -> new-index map
// (size old n + 1, slot 0 unused). Leaves the tracker reset to the new size.
std::vector<int> reduce(PresentationMatrix& m, EquivalenceTracker& tr,
                        std::vector<TraceEvent>* trace = nullptr);

struct ScoredZero {
    Block block = Block::Under;
    int row = 0, col = 0;
    long long score = 0;
};

// One-step lookahead: for every zero cell, the number of cells one
// propagateOnce sweep would fill after assigning that cell a fresh
// generator. Order matches PresentationMatrix::zeroCells().
std::vector<ScoredZero> scoreZeros(const PresentationMatrix& m, const EngineConfig& cfg);

// Same scores from a sweep replay specialized to fill counting: no clone
// per zero, no equivalence tracking, bitmask inner loops. Identical output
// on any input; adjoinGenerator uses it for selection.
std::vector<ScoredZero> scoreZerosFast(const PresentationMatrix& m, const EngineConfig& cfg);

// Picks a zero cell (best score, ties and LEX by block/row/col order),
// assigns the fresh generator n+1 there, expands the matrix. The caller
// must reset its tracker to the new size.
void adjoinGenerator(PresentationMatrix& m, const EngineConfig& cfg,
                     std::vector<TraceEvent>* trace = nullptr);

// Full completion: seed merges, then alternate propagation and reduction,
// adjoining fresh generators while the matrix has unknowns and room under
// cfg.maxSize. Finite results are re-verified against the axiom checkers
// and the input relations; failure there throws EngineBug.
CompletionOutcome complete(const PresentationMatrix& m,
                           const std::vector<std::pair<int, int>>& seeds,
                           const EngineConfig& cfg);

// Reapplies a recorded event list to an input matrix; the result equals the
// table the traced run produced.
PresentationMatrix replayTrace(const PresentationMatrix& m,
                               const std::vector<TraceEvent>& trace);

} // namespace bikei
