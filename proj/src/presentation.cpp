#include "bikei/presentation.hpp"

#include "bikei/error.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace bikei {

WordPtr makeLeaf(int index) {
    auto w = std::make_shared<BikeiWord>();
    w->kind = BikeiWord::Kind::Leaf;
    w->leaf = index;
    return w;
}

WordPtr makeWord(BikeiWord::Kind kind, WordPtr left, WordPtr right) {
    auto w = std::make_shared<BikeiWord>();
    w->kind = kind;
    w->left = std::move(left);
    w->right = std::move(right);
    return w;
}

bool wordsEqual(const WordPtr& a, const WordPtr& b) {
    if (a->kind != b->kind) return false;
    if (a->kind == BikeiWord::Kind::Leaf) return a->leaf == b->leaf;
    return wordsEqual(a->left, b->left) && wordsEqual(a->right, b->right);
}

namespace {

struct Token {
    enum class Type { Gens, Int, Gen, LParen, RParen, Under, Over, Equals, Sep, End };
    Type type;
    int line, col;
    long long value = 0; // Int and Gen
    char sep = 0;        // ';' or '\n' for Sep
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < text_.size()) {
            char ch = text_[pos_];
            if (ch == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
                continue;
            }
            if (ch == '\n') {
                out.push_back({Token::Type::Sep, line_, col_, 0, '\n'});
                advance();
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(ch))) {
                advance();
                continue;
            }
            int line = line_, col = col_;
            switch (ch) {
            case ';': out.push_back({Token::Type::Sep, line, col, 0, ';'}); advance(); continue;
            case '(': out.push_back({Token::Type::LParen, line, col}); advance(); continue;
            case ')': out.push_back({Token::Type::RParen, line, col}); advance(); continue;
            case '_': out.push_back({Token::Type::Under, line, col}); advance(); continue;
            case '^': out.push_back({Token::Type::Over, line, col}); advance(); continue;
            case '=': out.push_back({Token::Type::Equals, line, col}); advance(); continue;
            default: break;
            }
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                out.push_back({Token::Type::Int, line, col, lexNumber()});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(ch))) {
                std::string word;
                while (pos_ < text_.size() &&
                       std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                    word += text_[pos_];
                    advance();
                }
                if (word == "gens") {
                    out.push_back({Token::Type::Gens, line, col});
                    continue;
                }
                if (word == "x") {
                    if (pos_ >= text_.size() ||
                        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                        throw ParseError("expected generator index after 'x'", line, col);
                    out.push_back({Token::Type::Gen, line, col, lexNumber()});
                    continue;
                }
                throw ParseError("unexpected word '" + word + "'", line, col);
            }
            throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
        }
        out.push_back({Token::Type::End, line_, col_});
        return out;
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    long long lexNumber() {
        long long v = 0;
        int digits = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (++digits > 9)
                throw ParseError("number too large", line_, col_);
            advance();
        }
        return v;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Presentation run() {
        Presentation p;
        skipSeps();
        expect(Token::Type::Gens, "expected 'gens <count>;' header");
        const Token& count = expect(Token::Type::Int, "expected generator count");
        if (count.value < 1)
            throw ParseError("generator count must be at least 1", count.line, count.col);
        p.generatorCount = static_cast<int>(count.value);
        const Token& sep = peek();
        if (sep.type != Token::Type::Sep || sep.sep != ';')
            throw ParseError("expected ';' after generator count", sep.line, sep.col);
        ++idx_;

        for (;;) {
            skipSeps();
            if (peek().type == Token::Type::End) break;
            WordPtr lhs = parseTopWord(p.generatorCount);
            expect(Token::Type::Equals, "expected '=' in relation");
            WordPtr rhs = parseTopWord(p.generatorCount);
            const Token& end = peek();
            if (end.type != Token::Type::Sep && end.type != Token::Type::End)
                throw ParseError("expected ';' or newline after relation; operations "
                                 "are non-associative and need parentheses",
                                 end.line, end.col);
            p.relations.push_back({std::move(lhs), std::move(rhs)});
        }
        return p;
    }

private:
    const Token& peek() const { return toks_[idx_]; }

    const Token& expect(Token::Type type, const std::string& msg) {
        const Token& t = toks_[idx_];
        if (t.type != type) throw ParseError(msg, t.line, t.col);
        ++idx_;
        return t;
    }

    void skipSeps() {
        while (peek().type == Token::Type::Sep) ++idx_;
    }

    WordPtr parseAtom(int generatorCount) {
        const Token& t = peek();
        if (t.type == Token::Type::Gen) {
            ++idx_;
            if (t.value < 1)
                throw ParseError("generator index must be at least 1", t.line, t.col);
            if (t.value > generatorCount)
                throw ParseError("generator index " + std::to_string(t.value) +
                                     " exceeds declared count " +
                                     std::to_string(generatorCount),
                                 t.line, t.col);
            return makeLeaf(static_cast<int>(t.value));
        }
        if (t.type == Token::Type::LParen) {
            ++idx_;
            WordPtr left = parseAtom(generatorCount);
            BikeiWord::Kind op = parseOp();
            WordPtr right = parseAtom(generatorCount);
            expect(Token::Type::RParen, "expected ')'");
            return makeWord(op, std::move(left), std::move(right));
        }
        throw ParseError("expected a generator or '('", t.line, t.col);
    }

    BikeiWord::Kind parseOp() {
        const Token& t = peek();
        if (t.type == Token::Type::Under) {
            ++idx_;
            return BikeiWord::Kind::Under;
        }
        if (t.type == Token::Type::Over) {
            ++idx_;
            return BikeiWord::Kind::Over;
        }
        throw ParseError("expected an operation ('_' or '^')", t.line, t.col);
    }

    // Outermost parentheses are optional: WORD, or WORD OP WORD unparenthesized.
    WordPtr parseTopWord(int generatorCount) {
        WordPtr first = parseAtom(generatorCount);
        const Token& t = peek();
        if (t.type != Token::Type::Under && t.type != Token::Type::Over) return first;
        BikeiWord::Kind op = parseOp();
        WordPtr right = parseAtom(generatorCount);
        return makeWord(op, std::move(first), std::move(right));
    }

    std::vector<Token> toks_;
    size_t idx_ = 0;
};

} // namespace

Presentation parsePresentation(const std::string& text) {
    return Parser(Lexer(text).run()).run();
}

static void printWordInner(const WordPtr& w, std::ostringstream& out) {
    if (w->kind == BikeiWord::Kind::Leaf) {
        out << 'x' << w->leaf;
        return;
    }
    out << '(';
    printWordInner(w->left, out);
    out << (w->kind == BikeiWord::Kind::Under ? " _ " : " ^ ");
    printWordInner(w->right, out);
    out << ')';
}

std::string printWord(const WordPtr& w) {
    std::ostringstream out;
    if (w->kind == BikeiWord::Kind::Leaf) {
        printWordInner(w, out);
    } else {
        printWordInner(w->left, out);
        out << (w->kind == BikeiWord::Kind::Under ? " _ " : " ^ ");
        printWordInner(w->right, out);
    }
    return out.str();
}

std::string printPresentation(const Presentation& p) {
    std::ostringstream out;
    out << "gens " << p.generatorCount << ";\n";
    for (const auto& [lhs, rhs] : p.relations)
        out << printWord(lhs) << " = " << printWord(rhs) << '\n';
    return out.str();
}

ShortForm toShortForm(const Presentation& p) {
    int count = p.generatorCount;
    std::map<std::tuple<Block, int, int>, int> cells;
    std::vector<std::pair<int, int>> seeds;

    auto opOf = [](const WordPtr& w) {
        return w->kind == BikeiWord::Kind::Under ? Block::Under : Block::Over;
    };

    // Innermost first, left to right: children before the node itself.
    std::function<int(const WordPtr&)> reduceFull = [&](const WordPtr& w) -> int {
        if (w->kind == BikeiWord::Kind::Leaf) return w->leaf;
        int a = reduceFull(w->left);
        int b = reduceFull(w->right);
        auto key = std::make_tuple(opOf(w), a, b);
        auto it = cells.find(key);
        if (it != cells.end()) return it->second;
        int g = ++count;
        cells.emplace(key, g);
        return g;
    };

    // The outermost node of one side is equated with an existing generator,
    // so it fills a cell directly instead of receiving a fresh generator.
    auto encodeTop = [&](const WordPtr& w, int value) {
        int a = reduceFull(w->left);
        int b = reduceFull(w->right);
        auto key = std::make_tuple(opOf(w), a, b);
        auto it = cells.find(key);
        if (it == cells.end())
            cells.emplace(key, value);
        else if (it->second != value)
            seeds.push_back({it->second, value});
    };

    for (const auto& [lhs, rhs] : p.relations) {
        bool leafL = lhs->kind == BikeiWord::Kind::Leaf;
        bool leafR = rhs->kind == BikeiWord::Kind::Leaf;
        if (leafL && leafR) {
            if (lhs->leaf != rhs->leaf) seeds.push_back({lhs->leaf, rhs->leaf});
        } else if (leafL) {
            encodeTop(rhs, lhs->leaf);
        } else if (leafR) {
            encodeTop(lhs, rhs->leaf);
        } else {
            int a = reduceFull(lhs);
            encodeTop(rhs, a);
        }
    }

    ShortForm out{PresentationMatrix(count), std::move(seeds)};
    for (const auto& [key, value] : cells)
        out.matrix.cell(std::get<0>(key), std::get<1>(key), std::get<2>(key)) = value;
    return out;
}

std::vector<Relation> matrixToRelations(const PresentationMatrix& m) {
    std::vector<Relation> out;
    for (Block b : {Block::Under, Block::Over})
        for (int r = 1; r <= m.n; ++r)
            for (int c = 1; c <= m.n; ++c)
                if (int32_t v = m.cell(b, r, c); v != 0)
                    out.push_back({b, r, c, v});
    return out;
}

PresentationMatrix relationsToMatrix(int n, const std::vector<Relation>& rels) {
    PresentationMatrix m(n);
    for (const Relation& rel : rels) {
        if (rel.x < 1 || rel.x > n || rel.y < 1 || rel.y > n || rel.result < 1 ||
            rel.result > n)
            throw InvalidParameters("relation index out of range 1.." + std::to_string(n));
        int32_t& cell = m.cell(rel.kind, rel.x, rel.y);
        if (cell != 0 && cell != rel.result)
            throw InvalidParameters("conflicting relations target one cell");
        cell = rel.result;
    }
    return m;
}

} // namespace bikei
