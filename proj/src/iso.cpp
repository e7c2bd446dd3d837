#include "bikei/iso.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace bikei {

bool isomorphismValid(const BikeiTable& a, const BikeiTable& b, const Isomorphism& iso) {
    if (a.n != b.n || static_cast<int>(iso.map.size()) != a.n) return false;
    std::vector<char> seen(a.n + 1, 0);
    for (int v : iso.map) {
        if (v < 1 || v > a.n || seen[v]) return false;
        seen[v] = 1;
    }
    auto p = [&](int i) { return iso.map[i - 1]; };
    for (int x = 1; x <= a.n; ++x)
        for (int y = 1; y <= a.n; ++y) {
            if (p(a.under(x, y)) != b.under(p(x), p(y))) return false;
            if (p(a.over(x, y)) != b.over(p(x), p(y))) return false;
        }
    return true;
}

namespace {

// Color refinement over both operations. Color ids are ranks of sorted
// signatures, so colors of isomorphic tables correspond exactly.
std::vector<int> refineColors(const BikeiTable& t, std::vector<std::string>* finalSigs) {
    const int n = t.n;
    std::vector<int> color(n + 1, 0);
    int numColors = 1;
    std::vector<std::string> sigs(n + 1);
    for (;;) {
        for (int i = 1; i <= n; ++i) {
            std::vector<std::array<int, 5>> tuples(n);
            for (int j = 1; j <= n; ++j)
                tuples[j - 1] = {color[j], color[t.under(i, j)], color[t.under(j, i)],
                                 color[t.over(i, j)], color[t.over(j, i)]};
            std::sort(tuples.begin(), tuples.end());
            std::ostringstream ss;
            ss << color[i] << ':';
            for (const auto& tp : tuples)
                ss << tp[0] << ',' << tp[1] << ',' << tp[2] << ',' << tp[3] << ','
                   << tp[4] << ';';
            sigs[i] = ss.str();
        }
        std::vector<std::string> distinct(sigs.begin() + 1, sigs.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        const int k = static_cast<int>(distinct.size());
        for (int i = 1; i <= n; ++i)
            color[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(),
                                                         sigs[i]) -
                                        distinct.begin());
        if (k == numColors) break; // refinement can only split; no split means stable
        numColors = k;
    }
    if (finalSigs) *finalSigs = sigs;
    return color;
}

struct IsoSearch {
    const BikeiTable& a;
    const BikeiTable& b;
    int n;
    std::vector<int> colorA, colorB;
    std::vector<int> mp, rmp;         // partial bijection, 0 = unassigned
    std::vector<std::pair<int, int>> trail;

    bool force(int x, int y) {
        if (mp[x] == y) return true;
        if (mp[x] != 0 || rmp[y] != 0) return false;
        if (colorA[x] != colorB[y]) return false;
        mp[x] = y;
        rmp[y] = x;
        trail.push_back({x, y});
        size_t start = trail.size() - 1;
        // Closure: every assigned pair constrains products with every other.
        for (size_t qi = start; qi < trail.size(); ++qi) {
            int p = trail[qi].first, q = trail[qi].second;
            for (int x2 = 1; x2 <= n; ++x2) {
                int y2 = mp[x2];
                if (y2 == 0) continue;
                if (!forcePair(a.under(p, x2), b.under(q, y2))) return false;
                if (!forcePair(a.under(x2, p), b.under(y2, q))) return false;
                if (!forcePair(a.over(p, x2), b.over(q, y2))) return false;
                if (!forcePair(a.over(x2, p), b.over(y2, q))) return false;
            }
        }
        return true;
    }

    bool forcePair(int p, int q) {
        if (mp[p] == q) return true;
        if (mp[p] != 0 || rmp[q] != 0) return false;
        if (colorA[p] != colorB[q]) return false;
        mp[p] = q;
        rmp[q] = p;
        trail.push_back({p, q});
        return true;
    }

    void undoTo(size_t mark) {
        while (trail.size() > mark) {
            auto [x, y] = trail.back();
            trail.pop_back();
            mp[x] = 0;
            rmp[y] = 0;
        }
    }

    bool search() {
        // Most-constrained unassigned element first; ties to smallest index.
        int best = 0, bestCount = n + 1;
        for (int x = 1; x <= n; ++x) {
            if (mp[x] != 0) continue;
            int count = 0;
            for (int y = 1; y <= n; ++y)
                if (rmp[y] == 0 && colorB[y] == colorA[x]) ++count;
            if (count < bestCount) {
                bestCount = count;
                best = x;
            }
        }
        if (best == 0) return true; // everything assigned
        for (int y = 1; y <= n; ++y) {
            if (rmp[y] != 0 || colorB[y] != colorA[best]) continue;
            size_t mark = trail.size();
            if (force(best, y) && search()) return true;
            undoTo(mark);
        }
        return false;
    }
};

} // namespace

std::string invariantProfile(const BikeiTable& t) {
    std::vector<std::string> sigs;
    refineColors(t, &sigs);
    std::sort(sigs.begin() + 1, sigs.end());
    std::ostringstream out;
    out << "n=" << t.n << '|';
    for (int i = 1; i <= t.n; ++i)
        out << sigs[i] << '|';
    return out.str();
}

std::optional<Isomorphism> isIsomorphic(const BikeiTable& a, const BikeiTable& b) {
    if (a.n != b.n) return std::nullopt;
    const int n = a.n;
    IsoSearch s{a, b, n, {}, {}, {}, {}, {}};
    s.colorA = refineColors(a, nullptr);
    s.colorB = refineColors(b, nullptr);
    // Canonical color ranks must induce identical class sizes.
    std::vector<int> histA, histB;
    for (int i = 1; i <= n; ++i) {
        int c = s.colorA[i];
        if (c >= static_cast<int>(histA.size())) histA.resize(c + 1, 0);
        ++histA[c];
        c = s.colorB[i];
        if (c >= static_cast<int>(histB.size())) histB.resize(c + 1, 0);
        ++histB[c];
    }
    if (histA != histB) return std::nullopt;
    s.mp.assign(n + 1, 0);
    s.rmp.assign(n + 1, 0);
    if (!s.search()) return std::nullopt;
    Isomorphism iso;
    iso.map.resize(n);
    for (int i = 1; i <= n; ++i)
        iso.map[i - 1] = s.mp[i];
    if (!isomorphismValid(a, b, iso)) return std::nullopt; // defensive; search verified
    return iso;
}

} // namespace bikei
