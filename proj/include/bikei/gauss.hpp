#pragma once

#include "bikei/table.hpp"

#include <string>
#include <vector>

namespace bikei {

// One classical pass through a labeled crossing.
struct Pass {
    int label = 0;
    bool over = false;
    int sign = +1; // recorded for provenance; relations do not consult it
};

struct DiagramCode {
    std::vector<std::vector<Pass>> components;
    int crossingCount() const;
};

// Format: components separated by `;`; each component a concatenation of
// `O<label><sign>` / `U<label><sign>`, sign in {+,-}. An empty component is
// a zero-crossing unknot component. Validates that every label appears
// exactly twice, once over and once under, with matching signs.
DiagramCode parseGaussCode(const std::string& text);

// Semiarcs numbered globally: component by component, walk order within.
// Semiarc i of a k-pass component runs from pass i to pass i+1 (cyclic);
// a zero-pass component contributes one semiarc with no ports.
struct CrossingPorts {
    int label = 0;
    int underIn = 0, underOut = 0, overIn = 0, overOut = 0;
};

struct SemiarcLabeling {
    int semiarcCount = 0;
    std::vector<CrossingPorts> crossings; // ordered by label
};

SemiarcLabeling labelSemiarcs(const DiagramCode& d);

// Crossing with under-in a, under-out b, over-in c, over-out d yields
// relations b = a ▁ c and d = c ▔ a, encoded over the semiarc generators.
PresentationMatrix diagramToPresentation(const DiagramCode& d);

} // namespace bikei
