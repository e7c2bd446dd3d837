#include "bikei/engine.hpp"

#include "bikei/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace bikei {

// ---------------------------------------------------------------------------
// Trace text

namespace {

const char* blockToken(Block b) { return b == Block::Under ? "U" : "O"; }

Block tokenToBlock(const std::string& t) {
    if (t == "U") return Block::Under;
    if (t == "O") return Block::Over;
    throw ParseError("trace: expected block U or O, got '" + t + "'");
}

} // namespace

std::string formatTrace(const std::vector<TraceEvent>& trace) {
    std::ostringstream out;
    for (const TraceEvent& e : trace) {
        switch (e.kind) {
        case TraceEvent::Kind::Fill:
            out << "FILL " << blockToken(e.block) << ' ' << e.row << ' ' << e.col << ' '
                << e.value << '\n';
            break;
        case TraceEvent::Kind::Merge:
            out << "MERGE " << e.a << ' ' << e.b << '\n';
            break;
        case TraceEvent::Kind::Adjoin:
            out << "ADJOIN " << blockToken(e.block) << ' ' << e.row << ' ' << e.col << '\n';
            break;
        }
    }
    return out.str();
}

std::vector<TraceEvent> parseTrace(const std::string& text) {
    std::vector<TraceEvent> events;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue; // blank line
        if (word == "FILL") {
            std::string blk;
            int r = 0, c = 0, v = 0;
            if (!(ls >> blk >> r >> c >> v))
                throw ParseError("trace: malformed FILL", lineNo, 1);
            events.push_back(TraceEvent::fill(tokenToBlock(blk), r, c, v));
        } else if (word == "MERGE") {
            int a = 0, b = 0;
            if (!(ls >> a >> b)) throw ParseError("trace: malformed MERGE", lineNo, 1);
            events.push_back(TraceEvent::merge(a, b));
        } else if (word == "ADJOIN") {
            std::string blk;
            int r = 0, c = 0;
            if (!(ls >> blk >> r >> c))
                throw ParseError("trace: malformed ADJOIN", lineNo, 1);
            events.push_back(TraceEvent::adjoin(tokenToBlock(blk), r, c));
        } else {
            throw ParseError("trace: unknown event '" + word + "'", lineNo, 1);
        }
        std::string rest;
        if (ls >> rest) throw ParseError("trace: trailing data '" + rest + "'", lineNo, 1);
    }
    return events;
}

// ---------------------------------------------------------------------------
// EquivalenceTracker

void EquivalenceTracker::reset(int n) {
    parent_.resize(static_cast<size_t>(n) + 1);
    std::iota(parent_.begin(), parent_.end(), 0);
    pending_.clear();
}

int EquivalenceTracker::find(int a) {
    while (parent_[a] != a) {
        parent_[a] = parent_[parent_[a]]; // path halving
        a = parent_[a];
    }
    return a;
}

bool EquivalenceTracker::enqueue(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent_[std::max(ra, rb)] = std::min(ra, rb);
    pending_.emplace_back(a, b); // original labels; reduce renumbers as it goes
    return true;
}

// ---------------------------------------------------------------------------
// Propagation

namespace {

// Sorted columns of the known (nonzero) cells per block and row, kept live
// during a sweep so fills become visible at later loop positions.
struct KnownCols {
    int n = 0;
    std::vector<std::vector<int>> rows[2];

    explicit KnownCols(const PresentationMatrix& m) : n(m.n) {
        for (int b = 0; b < 2; ++b) {
            rows[b].assign(static_cast<size_t>(n) + 1, {});
            for (int r = 1; r <= n; ++r)
                for (int c = 1; c <= n; ++c)
                    if (m.cell(static_cast<Block>(b), r, c) != 0) rows[b][r].push_back(c);
        }
    }

    void insert(Block b, int r, int c) {
        auto& v = rows[static_cast<int>(b)][r];
        v.insert(std::upper_bound(v.begin(), v.end(), c), c);
    }

    const std::vector<int>& row(Block b, int r) const {
        return rows[static_cast<int>(b)][r];
    }
};

// Ascending walk over a sorted list that may grow while we walk it.
// Values inserted ahead of the cursor are visited; values at or before it
// are not, matching a plain index scan that reads cells live.
template <typename F>
void forAscending(const std::vector<int>& list, F&& fn) {
    int last = 0;
    for (;;) {
        auto it = std::upper_bound(list.begin(), list.end(), last);
        if (it == list.end()) break;
        last = *it;
        fn(last);
    }
}

// A side of an axiom equation: a known value, an unknown cell both of whose
// operands are known, or dead (some operand unknown).
struct Side {
    enum Kind { Val, Fill, Dead } kind = Dead;
    int v = 0;
    Block b = Block::Under;
    int r = 0, c = 0;

    static Side val(int v) { return {Val, v, Block::Under, 0, 0}; }
    static Side dead() { return {}; }
};

struct Sweep {
    PresentationMatrix& m;
    EquivalenceTracker& tr;
    std::vector<TraceEvent>* trace;
    long long* fillCount;
    KnownCols kc;
    bool changed = false;

    Sweep(PresentationMatrix& mm, EquivalenceTracker& t, std::vector<TraceEvent>* tp,
          long long* fc)
        : m(mm), tr(t), trace(tp), fillCount(fc), kc(mm) {}

    Side sideCell(Block b, int r, int c) {
        int v = m.cell(b, r, c);
        if (v != 0) return Side::val(v);
        return {Side::Fill, 0, b, r, c};
    }

    void doFill(Block b, int r, int c, int v) {
        m.cell(b, r, c) = v;
        kc.insert(b, r, c);
        if (trace) trace->push_back(TraceEvent::fill(b, r, c, v));
        if (fillCount) ++*fillCount;
        changed = true;
    }

    void resolve(const Side& L, const Side& R) {
        if (L.kind == Side::Dead || R.kind == Side::Dead) return;
        if (L.kind == Side::Val && R.kind == Side::Val) {
            if (L.v != R.v && tr.enqueue(L.v, R.v)) changed = true;
            return;
        }
        if (L.kind == Side::Fill && R.kind == Side::Fill) return; // no anchor yet
        const Side& cell = (L.kind == Side::Fill) ? L : R;
        int v = (L.kind == Side::Fill) ? R.v : L.v;
        doFill(cell.b, cell.r, cell.c, v);
    }

    void run(bool medial) {
        const int n = m.n;
        const Block U = Block::Under, O = Block::Over;

        // x _ x = x ^ x
        for (int x = 1; x <= n; ++x) resolve(sideCell(U, x, x), sideCell(O, x, x));

        // x _ (y ^ x) = x _ y
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                int t = m.over(y, x);
                if (t == 0) continue;
                resolve(sideCell(U, x, t), sideCell(U, x, y));
            }

        // x ^ (y _ x) = x ^ y
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                int t = m.under(y, x);
                if (t == 0) continue;
                resolve(sideCell(O, x, t), sideCell(O, x, y));
            }

        // (x ^ y) ^ y = x
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                int t = m.over(x, y);
                if (t == 0) continue;
                resolve(sideCell(O, t, y), Side::val(x));
            }

        // (x _ y) _ y = x
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y) {
                int t = m.under(x, y);
                if (t == 0) continue;
                resolve(sideCell(U, t, y), Side::val(x));
            }

        // (x ^ y) ^ (z _ y) = (x ^ z) ^ (y ^ z)
        for (int x = 1; x <= n; ++x)
            forAscending(kc.row(O, x), [&](int y) {
                int A = m.over(x, y);
                forAscending(kc.row(O, x), [&](int z) {
                    int C = m.over(x, z);
                    int B = m.under(z, y);
                    int D = m.over(y, z);
                    Side L = (A && B) ? sideCell(O, A, B) : Side::dead();
                    Side R = (C && D) ? sideCell(O, C, D) : Side::dead();
                    resolve(L, R);
                });
            });

        // (x ^ y) _ (z ^ y) = (x _ z) ^ (y _ z)
        for (int x = 1; x <= n; ++x)
            forAscending(kc.row(O, x), [&](int y) {
                int A = m.over(x, y);
                forAscending(kc.row(U, x), [&](int z) {
                    int C = m.under(x, z);
                    int B = m.over(z, y);
                    int D = m.under(y, z);
                    Side L = (A && B) ? sideCell(U, A, B) : Side::dead();
                    Side R = (C && D) ? sideCell(O, C, D) : Side::dead();
                    resolve(L, R);
                });
            });

        // (x _ y) _ (z ^ y) = (x _ z) _ (y _ z)
        for (int x = 1; x <= n; ++x)
            forAscending(kc.row(U, x), [&](int y) {
                int A = m.under(x, y);
                forAscending(kc.row(U, x), [&](int z) {
                    int C = m.under(x, z);
                    int B = m.over(z, y);
                    int D = m.under(y, z);
                    Side L = (A && B) ? sideCell(U, A, B) : Side::dead();
                    Side R = (C && D) ? sideCell(U, C, D) : Side::dead();
                    resolve(L, R);
                });
            });

        if (!medial) return;

        // (x _ y) _ (z _ w) = (x _ z) _ (y _ w)
        for (int x = 1; x <= n; ++x)
            forAscending(kc.row(U, x), [&](int y) {
                int A = m.under(x, y);
                forAscending(kc.row(U, x), [&](int z) {
                    int C = m.under(x, z);
                    for (int w = 1; w <= n; ++w) {
                        int B = m.under(z, w);
                        int D = m.under(y, w);
                        if (B == 0 && D == 0) continue;
                        Side L = (A && B) ? sideCell(U, A, B) : Side::dead();
                        Side R = (C && D) ? sideCell(U, C, D) : Side::dead();
                        resolve(L, R);
                    }
                });
            });

        // (x _ y) ^ (z _ w) = (x ^ z) _ (y ^ w)
        for (int x = 1; x <= n; ++x)
            forAscending(kc.row(U, x), [&](int y) {
                int A = m.under(x, y);
                forAscending(kc.row(O, x), [&](int z) {
                    int C = m.over(x, z);
                    for (int w = 1; w <= n; ++w) {
                        int B = m.under(z, w);
                        int D = m.over(y, w);
                        if (B == 0 && D == 0) continue;
                        Side L = (A && B) ? sideCell(O, A, B) : Side::dead();
                        Side R = (C && D) ? sideCell(U, C, D) : Side::dead();
                        resolve(L, R);
                    }
                });
            });

        // (x ^ y) ^ (z ^ w) = (x ^ z) ^ (y ^ w)
        for (int x = 1; x <= n; ++x)
            forAscending(kc.row(O, x), [&](int y) {
                int A = m.over(x, y);
                forAscending(kc.row(O, x), [&](int z) {
                    int C = m.over(x, z);
                    for (int w = 1; w <= n; ++w) {
                        int B = m.over(z, w);
                        int D = m.over(y, w);
                        if (B == 0 && D == 0) continue;
                        Side L = (A && B) ? sideCell(O, A, B) : Side::dead();
                        Side R = (C && D) ? sideCell(O, C, D) : Side::dead();
                        resolve(L, R);
                    }
                });
            });
    }
};

} // namespace

bool propagateOnce(PresentationMatrix& m, EquivalenceTracker& tr, const EngineConfig& cfg,
                   std::vector<TraceEvent>* trace, long long* fillCount) {
    Sweep sweep(m, tr, trace, fillCount);
    sweep.run(cfg.medialEnabled);
    return sweep.changed;
}

// ---------------------------------------------------------------------------
// Merging

namespace {

// Folds generator b into generator a (a < b) and renumbers b+1.. down by
// one. Cells that disagree are appended to conflicts in discovery order,
// already expressed in the renumbered index space.
void collapsePair(PresentationMatrix& m, int a, int b,
                  std::vector<std::pair<int, int>>* conflicts) {
    const int n = m.n;

    for (int blk = 0; blk < 2; ++blk) {
        Block bb = static_cast<Block>(blk);
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c) {
                int32_t& v = m.cell(bb, r, c);
                if (v == b) v = a;
            }
    }
    for (int blk = 0; blk < 2; ++blk) {
        Block bb = static_cast<Block>(blk);
        for (int c = 1; c <= n; ++c) {
            int x = m.cell(bb, a, c), y = m.cell(bb, b, c);
            if (x == 0)
                m.cell(bb, a, c) = y;
            else if (y != 0 && x != y && conflicts)
                conflicts->emplace_back(x, y);
        }
    }
    for (int blk = 0; blk < 2; ++blk) {
        Block bb = static_cast<Block>(blk);
        for (int r = 1; r <= n; ++r) {
            int x = m.cell(bb, r, a), y = m.cell(bb, r, b);
            if (x == 0)
                m.cell(bb, r, a) = y;
            else if (y != 0 && x != y && conflicts)
                conflicts->emplace_back(x, y);
        }
    }

    PresentationMatrix next(n - 1);
    auto shiftIdx = [b](int i) { return i > b ? i - 1 : i; };
    for (int blk = 0; blk < 2; ++blk) {
        Block bb = static_cast<Block>(blk);
        for (int r = 1; r <= n; ++r) {
            if (r == b) continue;
            for (int c = 1; c <= n; ++c) {
                if (c == b) continue;
                int v = m.cell(bb, r, c);
                next.cell(bb, shiftIdx(r), shiftIdx(c)) = v > b ? v - 1 : v;
            }
        }
    }
    m = std::move(next);

    if (conflicts)
        for (auto& [x, y] : *conflicts) {
            x = x > b ? x - 1 : x; // x,y never equal b: rewritten before reading
            y = y > b ? y - 1 : y;
        }
}

} // namespace

std::vector<int> reduce(PresentationMatrix& m, EquivalenceTracker& tr,
                        std::vector<TraceEvent>* trace) {
    std::deque<std::pair<int, int>> queue(tr.pending().begin(), tr.pending().end());
    std::vector<int> curMap(static_cast<size_t>(m.n) + 1);
    std::iota(curMap.begin(), curMap.end(), 0);

    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        if (p == q) continue;
        int a = std::min(p, q), b = std::max(p, q);
        if (trace) trace->push_back(TraceEvent::merge(p, q));

        std::vector<std::pair<int, int>> conflicts;
        collapsePair(m, a, b, &conflicts);

        auto shift = [a, b](int v) { return v == b ? a : (v > b ? v - 1 : v); };
        for (auto& [x, y] : queue) {
            x = shift(x);
            y = shift(y);
        }
        for (auto [x, y] : conflicts) queue.emplace_back(x, y);
        for (int& v : curMap)
            if (v != 0) v = shift(v);
    }

    tr.reset(m.n);
    return curMap;
}

// ---------------------------------------------------------------------------
// Zero selection

namespace {

PresentationMatrix expandByOne(const PresentationMatrix& m) {
    PresentationMatrix big(m.n + 1);
    for (int blk = 0; blk < 2; ++blk) {
        Block b = static_cast<Block>(blk);
        for (int r = 1; r <= m.n; ++r)
            for (int c = 1; c <= m.n; ++c) big.cell(b, r, c) = m.cell(b, r, c);
    }
    return big;
}

} // namespace

std::vector<ScoredZero> scoreZeros(const PresentationMatrix& m, const EngineConfig& cfg) {
    auto zeros = m.zeroCells();
    if (zeros.empty()) throw InvalidParameters("scoreZeros: matrix has no zero cells");

    std::vector<ScoredZero> out;
    out.reserve(zeros.size());
    EngineConfig quiet = cfg;
    quiet.traceEnabled = false;
    for (const auto& [blk, rc] : zeros) {
        PresentationMatrix sim = expandByOne(m);
        sim.cell(blk, rc.first, rc.second) = sim.n;
        EquivalenceTracker tr(sim.n);
        long long fills = 0;
        propagateOnce(sim, tr, quiet, nullptr, &fills);
        out.push_back({blk, rc.first, rc.second, fills});
    }
    return out;
}

void adjoinGenerator(PresentationMatrix& m, const EngineConfig& cfg,
                     std::vector<TraceEvent>* trace) {
    auto zeros = m.zeroCells();
    if (zeros.empty()) throw InvalidParameters("adjoinGenerator: matrix has no zero cells");
    if (m.n >= cfg.maxSize)
        throw InvalidParameters("adjoinGenerator: size bound already reached");

    Block blk = zeros.front().first;
    int row = zeros.front().second.first;
    int col = zeros.front().second.second;
    if (cfg.zeroStrategy == ZeroStrategy::Score) {
        auto scored = scoreZerosFast(m, cfg);
        const ScoredZero* best = &scored.front();
        for (const auto& s : scored)
            if (s.score > best->score) best = &s; // ties keep the earliest cell
        blk = best->block;
        row = best->row;
        col = best->col;
    }

    PresentationMatrix big = expandByOne(m);
    big.cell(blk, row, col) = big.n;
    m = std::move(big);
    if (trace) trace->push_back(TraceEvent::adjoin(blk, row, col));
}

// ---------------------------------------------------------------------------
// Completion

namespace {

void composeMap(std::vector<int>& genMap, const std::vector<int>& step) {
    for (int& v : genMap)
        if (v != 0) v = step[v];
}

void verifyFinite(const PresentationMatrix& input, const BikeiTable& t,
                  const std::vector<int>& genMap, const EngineConfig& cfg) {
    auto violations = checkBikeiAxioms(t);
    if (!violations.empty())
        throw EngineBug("complete: finished table violates axiom (" +
                        violations.front().axiomId + ")");
    if (cfg.medialEnabled) {
        auto mv = checkMedial(t);
        if (!mv.empty())
            throw EngineBug("complete: finished table violates axiom (" +
                            mv.front().axiomId + ")");
    }
    for (int blk = 0; blk < 2; ++blk) {
        Block b = static_cast<Block>(blk);
        for (int r = 1; r <= input.n; ++r)
            for (int c = 1; c <= input.n; ++c) {
                int v = input.cell(b, r, c);
                if (v == 0) continue;
                if (t.cell(b, genMap[r], genMap[c]) != genMap[v])
                    throw EngineBug("complete: input relation lost during completion");
            }
    }
}

} // namespace

CompletionOutcome complete(const PresentationMatrix& m0,
                           const std::vector<std::pair<int, int>>& seeds,
                           const EngineConfig& cfg) {
    if (m0.n < 1) throw InvalidParameters("complete: matrix size must be at least 1");
    if (cfg.maxSize < 1) throw InvalidParameters("complete: maxSize must be at least 1");
    for (int blk = 0; blk < 2; ++blk) {
        Block b = static_cast<Block>(blk);
        for (int r = 1; r <= m0.n; ++r)
            for (int c = 1; c <= m0.n; ++c) {
                int v = m0.cell(b, r, c);
                if (v < 0 || v > m0.n)
                    throw InvalidTable("complete: cell value out of range");
            }
    }

    PresentationMatrix m = m0;
    EquivalenceTracker tr(m.n);
    CompletionOutcome out;
    std::vector<TraceEvent>* trace = cfg.traceEnabled ? &out.trace : nullptr;

    std::vector<int> genMap(static_cast<size_t>(m0.n) + 1);
    std::iota(genMap.begin(), genMap.end(), 0);

    for (auto [a, b] : seeds) {
        if (a < 1 || a > m0.n || b < 1 || b > m0.n)
            throw InvalidParameters("complete: merge seed out of range");
        tr.enqueue(a, b);
    }
    if (tr.hasPending()) composeMap(genMap, reduce(m, tr, trace));

    for (;;) {
        for (;;) {
            bool changed = propagateOnce(m, tr, cfg, trace);
            if (tr.hasPending()) composeMap(genMap, reduce(m, tr, trace));
            if (!changed) break;
        }
        if (m.isComplete()) {
            out.status = CompletionStatus::Finite;
            out.table = toCompleteTable(m);
            out.finalSize = m.n;
            break;
        }
        if (m.n >= cfg.maxSize) {
            out.status = CompletionStatus::BoundExceeded;
            out.finalSize = m.n;
            break;
        }
        adjoinGenerator(m, cfg, trace);
        tr.reset(m.n);
        ++out.adjoinCount;
    }

    out.bound = cfg.maxSize;
    out.generatorImage = genMap;
    if (out.status == CompletionStatus::Finite) verifyFinite(m0, out.table, genMap, cfg);
    return out;
}

// ---------------------------------------------------------------------------
// Trace replay

PresentationMatrix replayTrace(const PresentationMatrix& m0,
                               const std::vector<TraceEvent>& trace) {
    PresentationMatrix m = m0;
    for (const TraceEvent& e : trace) {
        switch (e.kind) {
        case TraceEvent::Kind::Fill:
            m.cell(e.block, e.row, e.col) = e.value;
            break;
        case TraceEvent::Kind::Merge: {
            // Cascade merges appear as their own later events, so conflicts
            // discovered here are dropped.
            int a = std::min(e.a, e.b), b = std::max(e.a, e.b);
            collapsePair(m, a, b, nullptr);
            break;
        }
        case TraceEvent::Kind::Adjoin: {
            PresentationMatrix big = expandByOne(m);
            big.cell(e.block, e.row, e.col) = big.n;
            m = std::move(big);
            break;
        }
        }
    }
    return m;
}

} // namespace bikei
