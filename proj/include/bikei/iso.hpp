#pragma once

#include "bikei/table.hpp"

#include <optional>
#include <string>

namespace bikei {

struct Isomorphism {
    std::vector<int> map; // map[i-1] = image of generator i; a permutation of 1..n
};

// True iff applying iso to a yields b exactly.
bool isomorphismValid(const BikeiTable& a, const BikeiTable& b, const Isomorphism& iso);

// Isomorphism-invariant fingerprint: equal profiles are necessary but not
// sufficient for isomorphism. Derived from color refinement over both
// operations, with color ids assigned by sorted signature rank so profiles
// are comparable across tables.
std::string invariantProfile(const BikeiTable& t);

// Complete isomorphism test: color-refinement partition, then backtracking
// over profile classes with forced-image propagation.
std::optional<Isomorphism> isIsomorphic(const BikeiTable& a, const BikeiTable& b);

} // namespace bikei
