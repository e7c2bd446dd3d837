#include "bikei/io.hpp"

#include "bikei/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bikei {

namespace {

bool isBlank(const std::string& s) {
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

// Returns the next content line, skipping comments and blanks.
bool nextContentLine(std::istream& in, std::string& line, int& lineNo) {
    while (std::getline(in, line)) {
        ++lineNo;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        return true;
    }
    return false;
}

std::vector<long long> parseInts(const std::string& line, int lineNo) {
    std::vector<long long> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size())
            throw ParseError("expected an integer, got '" + tok + "'", lineNo, 1);
        out.push_back(v);
    }
    return out;
}

} // namespace

PresentationMatrix readMatrix(std::istream& in) {
    std::string line;
    int lineNo = 0;
    if (!nextContentLine(in, line, lineNo))
        throw ParseError("empty table file", 1, 1);

    // Optional `n=<k>` line emitted by the completion command.
    size_t first = line.find_first_not_of(" \t");
    if (line.compare(first, 2, "n=") == 0) {
        if (!nextContentLine(in, line, lineNo))
            throw ParseError("missing element count after n= line", lineNo, 1);
    }

    auto header = parseInts(line, lineNo);
    if (header.size() != 1 || header[0] < 1)
        throw ParseError("expected a single positive element count", lineNo, 1);
    const int n = static_cast<int>(header[0]);

    PresentationMatrix m(n);
    for (int r = 1; r <= n; ++r) {
        if (!nextContentLine(in, line, lineNo))
            throw ParseError("expected " + std::to_string(n) + " rows, got " +
                                 std::to_string(r - 1),
                             lineNo + 1, 1);
        auto row = parseInts(line, lineNo);
        if (static_cast<int>(row.size()) != 2 * n)
            throw ParseError("expected " + std::to_string(2 * n) + " entries, got " +
                                 std::to_string(row.size()),
                             lineNo, 1);
        for (int c = 1; c <= n; ++c) {
            long long u = row[c - 1], o = row[n + c - 1];
            if (u < 0 || u > n || o < 0 || o > n)
                throw ParseError("entry out of range 0.." + std::to_string(n),
                                 lineNo, 1);
            m.under(r, c) = static_cast<int32_t>(u);
            m.over(r, c) = static_cast<int32_t>(o);
        }
    }
    if (nextContentLine(in, line, lineNo) && !isBlank(line))
        throw ParseError("unexpected content after table rows", lineNo, 1);
    return m;
}

PresentationMatrix readMatrixString(const std::string& text) {
    std::istringstream ss(text);
    return readMatrix(ss);
}

PresentationMatrix readMatrixFile(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open file: " + path);
    return readMatrix(f);
}

BikeiTable readTable(std::istream& in) { return toCompleteTable(readMatrix(in)); }

BikeiTable readTableString(const std::string& text) {
    return toCompleteTable(readMatrixString(text));
}

BikeiTable readTableFile(const std::string& path) {
    return toCompleteTable(readMatrixFile(path));
}

std::string writeTable(const TableData& t) {
    std::ostringstream out;
    out << t.n << '\n';
    for (int r = 1; r <= t.n; ++r) {
        for (int c = 1; c <= t.n; ++c)
            out << t.under(r, c) << ' ';
        for (int c = 1; c <= t.n; ++c) {
            out << t.over(r, c);
            out << (c == t.n ? '\n' : ' ');
        }
    }
    return out.str();
}

std::string readWholeFile(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace bikei
