#include "doctest.h"

#include "bikei/error.hpp"
#include "bikei/gauss.hpp"
#include "bikei/io.hpp"

using namespace bikei;

TEST_CASE("single component code") {
    DiagramCode d = parseGaussCode("O1+U2+O3+U1+O2+U3+");
    REQUIRE(d.components.size() == 1);
    CHECK(d.crossingCount() == 3);
    const auto& c = d.components[0];
    REQUIRE(c.size() == 6);
    CHECK(c[0].label == 1);
    CHECK(c[0].over);
    CHECK(c[0].sign == 1);
    CHECK(c[1].label == 2);
    CHECK(!c[1].over);
    CHECK(c[3].label == 1);
    CHECK(!c[3].over);
}

TEST_CASE("multi component codes and signs") {
    DiagramCode d = parseGaussCode("O1+;U1+");
    REQUIRE(d.components.size() == 2);
    CHECK(d.crossingCount() == 1);
    CHECK(d.components[0].size() == 1);
    CHECK(d.components[1].size() == 1);

    DiagramCode neg = parseGaussCode("O1-U2-O2-U1-");
    CHECK(neg.components[0][0].sign == -1);
}

TEST_CASE("empty components are unknots") {
    DiagramCode d = parseGaussCode("");
    REQUIRE(d.components.size() == 1);
    CHECK(d.components[0].empty());
    PresentationMatrix m = diagramToPresentation(d);
    CHECK(m.n == 1);
    CHECK(m.zeroCells().size() == 2);

    // two-component unlink: two free generators
    PresentationMatrix u2 = diagramToPresentation(parseGaussCode(";"));
    CHECK(u2.n == 2);
    CHECK(u2.zeroCells().size() == 8);
}

TEST_CASE("code validation") {
    CHECK_THROWS_AS(parseGaussCode("O1+"), ParseError);            // unpaired
    CHECK_THROWS_AS(parseGaussCode("O1+O1+U1+"), ParseError);      // thrice
    CHECK_THROWS_AS(parseGaussCode("O1+O1+"), ParseError);         // both over
    CHECK_THROWS_AS(parseGaussCode("O1+U1-"), ParseError);         // sign clash
    CHECK_THROWS_AS(parseGaussCode("O1*U1*"), ParseError);         // bad sign
    CHECK_THROWS_AS(parseGaussCode("X1+U1+"), ParseError);         // bad pass
    CHECK_THROWS_AS(parseGaussCode("O0+U0+"), ParseError);         // bad label
    CHECK_THROWS_AS(parseGaussCode("O1+U2+;U1+"), ParseError);     // 2 unpaired
}

TEST_CASE("semiarc labeling") {
    SemiarcLabeling s = labelSemiarcs(parseGaussCode("U1+U2+O1+O2+"));
    CHECK(s.semiarcCount == 4);
    REQUIRE(s.crossings.size() == 2);
    CHECK(s.crossings[0].label == 1);
    // every port is a valid semiarc index
    for (const auto& c : s.crossings) {
        for (int port : {c.underIn, c.underOut, c.overIn, c.overOut}) {
            CHECK(port >= 1);
            CHECK(port <= s.semiarcCount);
        }
    }

    SemiarcLabeling h = labelSemiarcs(parseGaussCode("O1+;U1+"));
    CHECK(h.semiarcCount == 2);

    SemiarcLabeling t = labelSemiarcs(parseGaussCode("O1+U2+O3+U1+O2+U3+"));
    CHECK(t.semiarcCount == 6);
}

TEST_CASE("crossing relations fill two cells per crossing") {
    // b = a _ c and d = c ^ a for under-in a, under-out b, over-in c, over-out d
    DiagramCode d = parseGaussCode("U1+U2+O1+O2+");
    SemiarcLabeling s = labelSemiarcs(d);
    PresentationMatrix m = diagramToPresentation(d);
    CHECK(m.n == 4);
    CHECK(m.zeroCells().size() == size_t(2 * 4 * 4 - 4));
    for (const auto& c : s.crossings) {
        CHECK(m.under(c.underIn, c.overIn) == c.underOut);
        CHECK(m.over(c.overIn, c.underIn) == c.overOut);
    }
}

TEST_CASE("presentation size tracks the diagram") {
    PresentationMatrix m =
        diagramToPresentation(parseGaussCode("O1+U2+O3-U4-O2+U1+O4-U3-"));
    CHECK(m.n == 8);
    // two relations per classical crossing
    int filled = 0;
    for (int r = 1; r <= m.n; ++r)
        for (int c = 1; c <= m.n; ++c)
            filled += (m.under(r, c) != 0) + (m.over(r, c) != 0);
    CHECK(filled == 8);
}

TEST_CASE("whitespace is tolerated between passes") {
    DiagramCode d = parseGaussCode(" O1+ U2+\n O2+ U1+ ");
    CHECK(d.crossingCount() == 2);
    CHECK_THROWS_AS(parseGaussCode("O1+ . U1+"), ParseError);
}
