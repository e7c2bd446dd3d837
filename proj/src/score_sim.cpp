// Fast one-step lookahead scoring.
//
// scoreZeros clones and expands the matrix once per zero cell, seeds the
// fresh generator, and counts the fills of one full sweep. Only fills
// matter for the score; merges never change a cell. This file replays the
// sweep with everything but fill detection stripped out:
//  - the medial axioms, whose innermost loop dominates, are driven by
//    per-row bitmasks of "operand known at this column and the result cell
//    it names is still open"; xor of the two sides' masks gives exactly
//    the columns where one side fills the other,
//  - the masks are stamped with per-row epochs and rebuilt on demand, so
//    the cache survives across seeds: a sim invalidates only the rows it
//    wrote, and the rollback restores them,
//  - the remaining axioms are cheap enough to scan directly.
// Loop structure and visit order match the sweep cell for cell, so the
// fill counts are identical to scoreZeros on any input.

#include "bikei/engine.hpp"

#include "bikei/error.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace bikei {

namespace {

struct FastSim {
    int g = 0; // simulation size: m.n + 1, also the seeded value
    int W = 0; // 64-bit words per row mask; column bits are 1..g

    std::vector<int32_t> cells[2];  // row-major, stride g, 0 = unknown
    std::vector<uint64_t> known[2]; // per row, bit c set iff cell (r,c) known
    std::vector<uint32_t> epoch[2]; // per row, bumped on every cell change

    // Mask cache for the medial loops. Entry (r, v) of table (cb, zb) has
    // bit w set iff t = cell(cb, r, w) is known and cell(zb, v, t) is open.
    // An entry is fresh while its stamp matches (epoch[cb][r], epoch[zb][v]).
    std::vector<uint64_t> zmask[2][2];
    std::vector<uint64_t> zstamp[2][2];

    struct Touched {
        int b, r, c;
    };
    std::vector<Touched> dirty; // seed plus fills, for rollback
    long long fills = 0;

    explicit FastSim(const PresentationMatrix& m) : g(m.n + 1), W((g >> 6) + 1) {
        size_t rows = size_t(g) + 1;
        for (int b = 0; b < 2; ++b) {
            cells[b].assign(size_t(g) * g, 0);
            known[b].assign(rows * W, 0);
            epoch[b].assign(rows, 1);
            for (int zb = 0; zb < 2; ++zb) {
                zmask[b][zb].assign(rows * rows * W, 0);
                zstamp[b][zb].assign(rows * rows, ~0ULL);
            }
        }
        for (int b = 0; b < 2; ++b)
            for (int r = 1; r <= m.n; ++r)
                for (int c = 1; c <= m.n; ++c)
                    if (int v = m.cell(static_cast<Block>(b), r, c); v) {
                        cells[b][size_t(r - 1) * g + (c - 1)] = v;
                        known[b][size_t(r) * W + (c >> 6)] |= 1ULL << (c & 63);
                    }
    }

    int at(int b, int r, int c) const { return cells[b][size_t(r - 1) * g + (c - 1)]; }
    const uint64_t* krow(int b, int r) const { return &known[b][size_t(r) * W]; }

    // next known column after `after`, 0 if none; reads the mask live, so
    // cells filled ahead of the cursor are visited and ones behind are not,
    // matching the sweep's walk over its known-cell lists
    int nextBit(const uint64_t* mk, int after) const {
        int word = (after + 1) >> 6;
        if (word >= W) return 0;
        uint64_t cur = mk[word] & (~0ULL << ((after + 1) & 63));
        for (;;) {
            if (cur) return (word << 6) + std::countr_zero(cur);
            if (++word >= W) return 0;
            cur = mk[word];
        }
    }

    void writeCell(int b, int r, int c, int v) {
        cells[b][size_t(r - 1) * g + (c - 1)] = v;
        known[b][size_t(r) * W + (c >> 6)] |= 1ULL << (c & 63);
        ++epoch[b][r];
        dirty.push_back({b, r, c});
    }

    void doFill(int b, int r, int c, int v) {
        writeCell(b, r, c, v);
        ++fills;
    }

    // mirrors the sweep's resolve with merges dropped; callers have already
    // checked that both sides' operands are known
    void resolvePair(int b1, int r1, int c1, int b2, int r2, int c2) {
        int v1 = at(b1, r1, c1), v2 = at(b2, r2, c2);
        if (v1 == 0) {
            if (v2) doFill(b1, r1, c1, v2);
        } else if (v2 == 0) {
            doFill(b2, r2, c2, v1);
        }
    }

    const uint64_t* zm(int cb, int zb, int r, int v) {
        size_t idx = size_t(r) * (g + 1) + v;
        uint64_t want = (uint64_t(epoch[cb][r]) << 32) | epoch[zb][v];
        uint64_t* mask = &zmask[cb][zb][idx * W];
        if (zstamp[cb][zb][idx] != want) {
            const int32_t* row = &cells[cb][size_t(r - 1) * g];
            const int32_t* vrow = &cells[zb][size_t(v - 1) * g];
            for (int wd = 0; wd < W; ++wd) mask[wd] = 0;
            for (int w = 1; w <= g; ++w)
                if (int t = row[w - 1]; t && vrow[t - 1] == 0)
                    mask[w >> 6] |= 1ULL << (w & 63);
            zstamp[cb][zb][idx] = want;
        }
        return mask;
    }

    // One medial (x, y, z) slice over all w. Side one reads operand
    // B = cell(cb1, r1, w) into result cell (tb1, v1, B), side two reads
    // D = cell(cb2, r2, w) into (tb2, v2, D). A set bit means exactly one
    // of the two result cells is open, so each hit is a fill; the masks go
    // stale at that point and are refetched before the scan resumes.
    void medialSlice(int cb1, int r1, int v1, int tb1, int cb2, int r2, int v2, int tb2) {
        int w = 0;
        for (;;) {
            const uint64_t* t1 = zm(cb1, tb1, r1, v1);
            const uint64_t* t2 = zm(cb2, tb2, r2, v2);
            const uint64_t* k1 = krow(cb1, r1);
            const uint64_t* k2 = krow(cb2, r2);
            int word = (w + 1) >> 6;
            if (word >= W) return;
            uint64_t cur = ((t1[word] ^ t2[word]) & k1[word] & k2[word]) &
                           (~0ULL << ((w + 1) & 63));
            for (;;) {
                if (cur) {
                    w = (word << 6) + std::countr_zero(cur);
                    break;
                }
                if (++word >= W) return;
                cur = (t1[word] ^ t2[word]) & k1[word] & k2[word];
            }
            int B = at(cb1, r1, w), D = at(cb2, r2, w);
            resolvePair(tb1, v1, B, tb2, v2, D);
        }
    }

    long long run(Block sb, int sr, int sc, bool medial) {
        writeCell(static_cast<int>(sb), sr, sc, g); // the seed is not a fill

        // x _ x = x ^ x
        for (int x = 1; x <= g; ++x) resolvePair(0, x, x, 1, x, x);

        // x _ (y ^ x) = x _ y
        for (int x = 1; x <= g; ++x)
            for (int y = 1; y <= g; ++y)
                if (int t = at(1, y, x); t) resolvePair(0, x, t, 0, x, y);

        // x ^ (y _ x) = x ^ y
        for (int x = 1; x <= g; ++x)
            for (int y = 1; y <= g; ++y)
                if (int t = at(0, y, x); t) resolvePair(1, x, t, 1, x, y);

        // (x ^ y) ^ y = x
        for (int x = 1; x <= g; ++x)
            for (int y = 1; y <= g; ++y)
                if (int t = at(1, x, y); t && at(1, t, y) == 0) doFill(1, t, y, x);

        // (x _ y) _ y = x
        for (int x = 1; x <= g; ++x)
            for (int y = 1; y <= g; ++y)
                if (int t = at(0, x, y); t && at(0, t, y) == 0) doFill(0, t, y, x);

        // (x ^ y) ^ (z _ y) = (x ^ z) ^ (y ^ z)
        for (int x = 1; x <= g; ++x) {
            const uint64_t* ko = krow(1, x);
            for (int y = nextBit(ko, 0); y; y = nextBit(ko, y)) {
                int A = at(1, x, y);
                for (int z = nextBit(ko, 0); z; z = nextBit(ko, z)) {
                    int C = at(1, x, z);
                    int B = at(0, z, y);
                    if (!B) continue;
                    int D = at(1, y, z);
                    if (!D) continue;
                    resolvePair(1, A, B, 1, C, D);
                }
            }
        }

        // (x ^ y) _ (z ^ y) = (x _ z) ^ (y _ z)
        for (int x = 1; x <= g; ++x) {
            const uint64_t* ko = krow(1, x);
            const uint64_t* ku = krow(0, x);
            for (int y = nextBit(ko, 0); y; y = nextBit(ko, y)) {
                int A = at(1, x, y);
                for (int z = nextBit(ku, 0); z; z = nextBit(ku, z)) {
                    int C = at(0, x, z);
                    int B = at(1, z, y);
                    if (!B) continue;
                    int D = at(0, y, z);
                    if (!D) continue;
                    resolvePair(0, A, B, 1, C, D);
                }
            }
        }

        // (x _ y) _ (z ^ y) = (x _ z) _ (y _ z)
        for (int x = 1; x <= g; ++x) {
            const uint64_t* ku = krow(0, x);
            for (int y = nextBit(ku, 0); y; y = nextBit(ku, y)) {
                int A = at(0, x, y);
                for (int z = nextBit(ku, 0); z; z = nextBit(ku, z)) {
                    int C = at(0, x, z);
                    int B = at(1, z, y);
                    if (!B) continue;
                    int D = at(0, y, z);
                    if (!D) continue;
                    resolvePair(0, A, B, 0, C, D);
                }
            }
        }

        if (medial) {
            // (x _ y) _ (z _ w) = (x _ z) _ (y _ w)
            for (int x = 1; x <= g; ++x) {
                const uint64_t* ku = krow(0, x);
                for (int y = nextBit(ku, 0); y; y = nextBit(ku, y)) {
                    int A = at(0, x, y);
                    for (int z = nextBit(ku, 0); z; z = nextBit(ku, z)) {
                        int C = at(0, x, z);
                        medialSlice(0, z, A, 0, 0, y, C, 0);
                    }
                }
            }

            // (x _ y) ^ (z _ w) = (x ^ z) _ (y ^ w)
            for (int x = 1; x <= g; ++x) {
                const uint64_t* ku = krow(0, x);
                const uint64_t* ko = krow(1, x);
                for (int y = nextBit(ku, 0); y; y = nextBit(ku, y)) {
                    int A = at(0, x, y);
                    for (int z = nextBit(ko, 0); z; z = nextBit(ko, z)) {
                        int C = at(1, x, z);
                        medialSlice(0, z, A, 1, 1, y, C, 0);
                    }
                }
            }

            // (x ^ y) ^ (z ^ w) = (x ^ z) ^ (y ^ w)
            for (int x = 1; x <= g; ++x) {
                const uint64_t* ko = krow(1, x);
                for (int y = nextBit(ko, 0); y; y = nextBit(ko, y)) {
                    int A = at(1, x, y);
                    for (int z = nextBit(ko, 0); z; z = nextBit(ko, z)) {
                        int C = at(1, x, z);
                        medialSlice(1, z, A, 1, 1, y, C, 1);
                    }
                }
            }
        }

        for (const auto& t : dirty) {
            cells[t.b][size_t(t.r - 1) * g + (t.c - 1)] = 0;
            known[t.b][size_t(t.r) * W + (t.c >> 6)] &= ~(1ULL << (t.c & 63));
            ++epoch[t.b][t.r];
        }
        dirty.clear();
        long long got = fills;
        fills = 0;
        return got;
    }
};

} // namespace

std::vector<ScoredZero> scoreZerosFast(const PresentationMatrix& m, const EngineConfig& cfg) {
    auto zeros = m.zeroCells();
    if (zeros.empty()) throw InvalidParameters("scoreZeros: matrix has no zero cells");

    FastSim sim(m);
    std::vector<ScoredZero> out;
    out.reserve(zeros.size());
    for (const auto& [blk, rc] : zeros)
        out.push_back(
            {blk, rc.first, rc.second, sim.run(blk, rc.first, rc.second, cfg.medialEnabled)});
    return out;
}

} // namespace bikei
