#include "doctest.h"

#include "bikei/error.hpp"
#include "bikei/io.hpp"
#include "bikei/table.hpp"

using namespace bikei;

TEST_CASE("matrix text round trip") {
    std::string text =
        "4\n"
        "0 0 2 0 0 3 0 0\n"
        "4 0 0 0 0 0 0 0\n"
        "0 0 0 0 4 0 0 0\n"
        "0 0 0 0 0 0 0 0\n";
    PresentationMatrix m = readMatrixString(text);
    CHECK(m.n == 4);
    CHECK(m.under(1, 3) == 2);
    CHECK(m.over(1, 2) == 3);
    CHECK(m.over(3, 1) == 4);
    CHECK(writeTable(m) == text);
}

TEST_CASE("reader accepts comments, blank lines and a cardinality prefix") {
    PresentationMatrix m = readMatrixString(
        "# partial input\n"
        "\n"
        "n=2\n"
        "2\n"
        "0 2  0 0\n"
        "1 0 0 0\n");
    CHECK(m.n == 2);
    CHECK(m.under(1, 2) == 2);
    CHECK(m.under(2, 1) == 1);
}

TEST_CASE("malformed matrices are rejected") {
    CHECK_THROWS_AS(readMatrixString(""), ParseError);
    CHECK_THROWS_AS(readMatrixString("2\n1 1 1\n1 1 1 1\n"), ParseError);
    CHECK_THROWS_AS(readMatrixString("2\n1 1 1 1 1\n1 1 1 1\n"), ParseError);
    CHECK_THROWS_AS(readMatrixString("1\nx 1\n"), ParseError);
    CHECK_THROWS_AS(readMatrixString("2\n3 0 0 0\n0 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(readMatrixString("2\n-1 0 0 0\n0 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(readMatrixString("0\n"), ParseError);
}

TEST_CASE("complete tables reject unknown entries") {
    CHECK_THROWS_AS(readTableString("2\n2 2 2 2\n1 0 1 1\n"), InvalidTable);
    BikeiTable t = readTableString("2\n2 2 2 2\n1 1 1 1\n");
    CHECK(t.n == 2);
    CHECK(writeTable(t) == "2\n2 2 2 2\n1 1 1 1\n");
}

TEST_CASE("table round trips through files") {
    std::string path = "io_roundtrip.tmp";
    {
        BikeiTable t = alexanderBikei(4, 3, 1);
        std::string text = writeTable(t);
        FILE* f = fopen(path.c_str(), "wb");
        REQUIRE(f);
        fwrite(text.data(), 1, text.size(), f);
        fclose(f);
        CHECK(readTableFile(path) == t);
    }
    remove(path.c_str());
    CHECK_THROWS_AS(readTableFile(path), Error);
    CHECK_THROWS_WITH_AS(readWholeFile("definitely_missing.txt"),
                         "cannot open file: definitely_missing.txt", Error);
}

TEST_CASE("parse errors carry a location") {
    try {
        readMatrixString("2\n1 1 1 1\n9 1 1 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("line") != std::string::npos);
    }
}
