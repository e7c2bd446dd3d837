#include "bikei/table.hpp"

#include "bikei/error.hpp"

#include <string>

namespace bikei {

bool PresentationMatrix::isComplete() const {
    for (int32_t v : underCells)
        if (v == 0) return false;
    for (int32_t v : overCells)
        if (v == 0) return false;
    return true;
}

std::vector<std::pair<Block, std::pair<int, int>>> PresentationMatrix::zeroCells() const {
    std::vector<std::pair<Block, std::pair<int, int>>> out;
    for (Block b : {Block::Under, Block::Over})
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c)
                if (cell(b, r, c) == 0) out.push_back({b, {r, c}});
    return out;
}

static void requireTotal(const TableData& t, const char* what) {
    for (int r = 1; r <= t.n; ++r)
        for (int c = 1; c <= t.n; ++c) {
            int32_t u = t.under(r, c), o = t.over(r, c);
            if (u < 1 || u > t.n || o < 1 || o > t.n)
                throw InvalidTable(std::string(what) + ": entry out of range 1.." +
                                   std::to_string(t.n) + " at row " + std::to_string(r) +
                                   ", col " + std::to_string(c));
        }
}

BikeiTable toCompleteTable(const PresentationMatrix& m) {
    requireTotal(m, "incomplete table");
    BikeiTable t(m.n);
    t.underCells = m.underCells;
    t.overCells = m.overCells;
    return t;
}

PresentationMatrix toMatrix(const BikeiTable& t) {
    PresentationMatrix m(t.n);
    m.underCells = t.underCells;
    m.overCells = t.overCells;
    return m;
}

std::vector<AxiomViolation> checkBikeiAxioms(const BikeiTable& t) {
    requireTotal(t, "checkBikeiAxioms");
    std::vector<AxiomViolation> out;
    const int n = t.n;
    auto add = [&](const char* id, std::vector<int> w, int lhs, int rhs) {
        if (lhs != rhs) out.push_back({id, std::move(w), lhs, rhs});
    };
    for (int x = 1; x <= n; ++x)
        add("i", {x}, t.under(x, x), t.over(x, x));
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            add("ii.i", {x, y}, t.under(x, t.over(y, x)), t.under(x, y));
            add("ii.ii", {x, y}, t.over(x, t.under(y, x)), t.over(x, y));
            add("ii.iii", {x, y}, t.over(t.over(x, y), y), x);
            add("ii.iv", {x, y}, t.under(t.under(x, y), y), x);
        }
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z) {
                add("iii.i", {x, y, z}, t.over(t.over(x, y), t.under(z, y)),
                    t.over(t.over(x, z), t.over(y, z)));
                add("iii.ii", {x, y, z}, t.under(t.over(x, y), t.over(z, y)),
                    t.over(t.under(x, z), t.under(y, z)));
                add("iii.iii", {x, y, z}, t.under(t.under(x, y), t.over(z, y)),
                    t.under(t.under(x, z), t.under(y, z)));
            }
    return out;
}

std::vector<AxiomViolation> checkMedial(const BikeiTable& t) {
    requireTotal(t, "checkMedial");
    std::vector<AxiomViolation> out;
    const int n = t.n;
    auto add = [&](const char* id, int x, int y, int z, int w, int lhs, int rhs) {
        if (lhs != rhs) out.push_back({id, {x, y, z, w}, lhs, rhs});
    };
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z)
                for (int w = 1; w <= n; ++w) {
                    add("m.i", x, y, z, w, t.under(t.under(x, y), t.under(z, w)),
                        t.under(t.under(x, z), t.under(y, w)));
                    add("m.ii", x, y, z, w, t.over(t.under(x, y), t.under(z, w)),
                        t.under(t.over(x, z), t.over(y, w)));
                    add("m.iii", x, y, z, w, t.over(t.over(x, y), t.over(z, w)),
                        t.over(t.over(x, z), t.over(y, w)));
                }
    return out;
}

// Z_n with residue 0 represented by n, so values stay in 1..n.
static int modRep(long long v, int n) {
    int r = int(((v % n) + n) % n);
    return r == 0 ? n : r;
}

BikeiTable alexanderBikei(int n, int s, int t) {
    if (n < 1) throw InvalidParameters("alexanderBikei: n must be >= 1");
    auto mod = [&](long long v) { return int(((v % n) + n) % n); };
    if (mod(1LL * s * s) != mod(1))
        throw InvalidParameters("alexanderBikei: s^2 = 1 fails mod " + std::to_string(n));
    if (mod(1LL * t * t) != mod(1))
        throw InvalidParameters("alexanderBikei: t^2 = 1 fails mod " + std::to_string(n));
    if (mod(1LL * (1 - s) * (s - t)) != 0)
        throw InvalidParameters("alexanderBikei: (1-s)(s-t) = 0 fails mod " + std::to_string(n));
    BikeiTable out(n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            out.under(x, y) = modRep(1LL * t * x + 1LL * (s - t) * y, n);
            out.over(x, y) = modRep(1LL * s * x, n);
        }
    return out;
}

BikeiTable coreKei(const std::vector<std::vector<int>>& groupMul) {
    const int n = int(groupMul.size());
    if (n < 1) throw InvalidParameters("coreKei: empty multiplication table");
    for (const auto& row : groupMul) {
        if (int(row.size()) != n)
            throw InvalidParameters("coreKei: multiplication table is not square");
        for (int v : row)
            if (v < 1 || v > n)
                throw InvalidParameters("coreKei: table entry out of range 1.." +
                                        std::to_string(n));
    }
    auto mul = [&](int a, int b) { return groupMul[a - 1][b - 1]; };
    int e = 0;
    for (int c = 1; c <= n && e == 0; ++c) {
        bool ok = true;
        for (int x = 1; x <= n; ++x)
            if (mul(c, x) != x || mul(x, c) != x) { ok = false; break; }
        if (ok) e = c;
    }
    if (e == 0) throw InvalidParameters("coreKei: no identity element");
    std::vector<int> inv(n + 1, 0);
    for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y)
            if (mul(x, y) == e && mul(y, x) == e) { inv[x] = y; break; }
        if (inv[x] == 0)
            throw InvalidParameters("coreKei: element " + std::to_string(x) +
                                    " has no inverse");
    }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw InvalidParameters("coreKei: multiplication is not associative");
    BikeiTable out(n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            out.under(x, y) = mul(mul(y, inv[x]), y);
            out.over(x, y) = x;
        }
    return out;
}

BikeiTable takasakiKei(int n) {
    if (n < 1) throw InvalidParameters("takasakiKei: n must be >= 1");
    BikeiTable out(n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            out.under(x, y) = modRep(2LL * y - x, n);
            out.over(x, y) = x;
        }
    return out;
}

BikeiTable cartesianProduct(const BikeiTable& a, const BikeiTable& b) {
    const int na = a.n, nb = b.n;
    BikeiTable out(na * nb);
    auto idx = [&](int i, int j) { return (i - 1) * nb + j; };
    for (int i = 1; i <= na; ++i)
        for (int j = 1; j <= nb; ++j)
            for (int k = 1; k <= na; ++k)
                for (int l = 1; l <= nb; ++l) {
                    out.under(idx(i, j), idx(k, l)) = idx(a.under(i, k), b.under(j, l));
                    out.over(idx(i, j), idx(k, l)) = idx(a.over(i, k), b.over(j, l));
                }
    return out;
}

BikeiTable verticalMirror(const BikeiTable& t) {
    BikeiTable out(t.n);
    out.underCells = t.overCells;
    out.overCells = t.underCells;
    return out;
}

} // namespace bikei
