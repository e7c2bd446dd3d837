#include "bikei/gauss.hpp"

#include "bikei/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace bikei {

int DiagramCode::crossingCount() const {
    int passes = 0;
    for (const auto& comp : components) passes += static_cast<int>(comp.size());
    return passes / 2;
}

DiagramCode parseGaussCode(const std::string& text) {
    DiagramCode d;
    d.components.emplace_back();
    size_t pos = 0;
    int line = 1, col = 1;
    auto advance = [&]() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    };
    while (pos < text.size()) {
        char ch = text[pos];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance();
            continue;
        }
        if (ch == ';') {
            d.components.emplace_back();
            advance();
            continue;
        }
        if (ch == 'O' || ch == 'U') {
            int l0 = line, c0 = col;
            bool over = ch == 'O';
            advance();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected crossing label after pass role", l0, c0);
            long long label = 0;
            int digits = 0;
            while (pos < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[pos]))) {
                label = label * 10 + (text[pos] - '0');
                if (++digits > 9) throw ParseError("crossing label too large", l0, c0);
                advance();
            }
            if (label < 1)
                throw ParseError("crossing label must be positive", l0, c0);
            if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
                throw ParseError("expected sign '+' or '-' after crossing " +
                                     std::to_string(label),
                                 l0, c0);
            int sign = text[pos] == '+' ? +1 : -1;
            advance();
            d.components.back().push_back({static_cast<int>(label), over, sign});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + ch + "' in Gauss code",
                         line, col);
    }

    // Pairing validation: each label exactly twice, once over and once under,
    // signs agreeing.
    std::map<int, std::vector<const Pass*>> byLabel;
    for (const auto& comp : d.components)
        for (const auto& p : comp) byLabel[p.label].push_back(&p);
    for (const auto& [label, passes] : byLabel) {
        if (passes.size() != 2)
            throw ParseError("crossing " + std::to_string(label) + " appears " +
                             std::to_string(passes.size()) + " times, expected 2");
        if (passes[0]->over == passes[1]->over)
            throw ParseError("crossing " + std::to_string(label) + " has two " +
                             (passes[0]->over ? "over" : "under") + " passes");
        if (passes[0]->sign != passes[1]->sign)
            throw ParseError("crossing " + std::to_string(label) +
                             " has mismatched signs");
    }
    return d;
}

SemiarcLabeling labelSemiarcs(const DiagramCode& d) {
    SemiarcLabeling out;
    std::map<int, CrossingPorts> ports;
    int base = 0;
    for (const auto& comp : d.components) {
        const int k = static_cast<int>(comp.size());
        if (k == 0) {
            out.semiarcCount += 1; // free unknot component
            base += 1;
            continue;
        }
        for (int j = 1; j <= k; ++j) {
            const Pass& p = comp[j - 1];
            int in = base + (j == 1 ? k : j - 1); // semiarc ending at pass j
            int outArc = base + j;                // semiarc starting at pass j
            CrossingPorts& cp = ports[p.label];
            cp.label = p.label;
            if (p.over) {
                cp.overIn = in;
                cp.overOut = outArc;
            } else {
                cp.underIn = in;
                cp.underOut = outArc;
            }
        }
        out.semiarcCount += k;
        base += k;
    }
    for (auto& [label, cp] : ports) out.crossings.push_back(cp);
    return out;
}

PresentationMatrix diagramToPresentation(const DiagramCode& d) {
    SemiarcLabeling lab = labelSemiarcs(d);
    const int n = std::max(lab.semiarcCount, 1); // empty input is the unknot
    PresentationMatrix m(n);
    for (const CrossingPorts& cp : lab.crossings) {
        int a = cp.underIn, b = cp.underOut, c = cp.overIn, e = cp.overOut;
        // b = a ▁ c and d = c ▔ a; valid pairing makes each cell unique
        m.under(a, c) = b;
        m.over(c, a) = e;
    }
    return m;
}

} // namespace bikei
