#pragma once

#include "bikei/table.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace bikei {

// Word over the two operations; operators are non-associative, so words are
// explicit trees. Leaves hold generator indices (1-based).
struct BikeiWord {
    enum class Kind { Leaf, Under, Over };
    Kind kind = Kind::Leaf;
    int leaf = 0;
    std::shared_ptr<const BikeiWord> left, right;
};
using WordPtr = std::shared_ptr<const BikeiWord>;

WordPtr makeLeaf(int index);
WordPtr makeWord(BikeiWord::Kind kind, WordPtr left, WordPtr right);
bool wordsEqual(const WordPtr& a, const WordPtr& b);

struct Presentation {
    int generatorCount = 0;
    std::vector<std::pair<WordPtr, WordPtr>> relations;
};

// Short-form relation: result = x op y.
struct Relation {
    Block kind;
    int x = 0;
    int y = 0;
    int result = 0;
};

// Grammar: optional `#` comment lines; header `gens <n>;`; relations
// `WORD = WORD` separated by `;` or newlines. WORD := x<int> | ( WORD OP WORD ),
// OP := `_` (under) | `^` (over); outermost parentheses optional.
Presentation parsePresentation(const std::string& text);

std::string printWord(const WordPtr& w);
std::string printPresentation(const Presentation& p);

// Short-form conversion result: the matrix plus merge directives for
// relations that collapse to generator = generator.
struct ShortForm {
    PresentationMatrix matrix;
    std::vector<std::pair<int, int>> mergeSeeds;
};

// Tietze conversion: one fresh generator per non-leaf subterm, innermost
// first, left to right in relation order. A top-level operation node is
// encoded directly into the cell targeted by the other side when that side
// is already a generator.
ShortForm toShortForm(const Presentation& p);

std::vector<Relation> matrixToRelations(const PresentationMatrix& m);
PresentationMatrix relationsToMatrix(int n, const std::vector<Relation>& rels);

} // namespace bikei
