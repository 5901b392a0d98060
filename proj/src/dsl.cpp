#include "quipot/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace quipot {

namespace {

struct Token {
    enum Kind { Ident, Sym, End } kind = End;
    std::string text;
    int line = 1;
    int col = 1;
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                advance(text[i]);
                ++i;
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++i;
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (ident_char(c)) {
            t.kind = Token::Ident;
            while (i < text.size() && ident_char(text[i])) {
                t.text += text[i];
                advance(text[i]);
                ++i;
            }
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            t.kind = Token::Sym;
            t.text = "->";
            advance(c);
            advance('>');
            i += 2;
        } else if (c == ';' || c == ':' || c == '=' || c == '+' || c == '-' || c == '/') {
            t.kind = Token::Sym;
            t.text = std::string(1, c);
            advance(c);
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    InputDocument parse(bool diagrammatic) {
        InputDocument doc;
        bool have_n = false;
        bool have_potential = false;
        while (peek().kind != Token::End) {
            Token head = expect_ident("statement keyword");
            if (head.text == "vertex") {
                doc.vertices.push_back(expect_ident("vertex name").text);
                expect_sym(";");
            } else if (head.text == "arrow") {
                ArrowSpec a;
                a.name = expect_ident("arrow name").text;
                expect_sym(":");
                a.source = expect_ident("source vertex").text;
                expect_sym("->");
                a.target = expect_ident("target vertex").text;
                Token kw = expect_ident("'deg'");
                if (kw.text != "deg")
                    throw ParseError("expected 'deg', got '" + kw.text + "'", kw.line, kw.col);
                a.degree = parse_int();
                expect_sym(";");
                doc.arrows.push_back(std::move(a));
            } else if (head.text == "n") {
                if (have_n) throw ParseError("duplicate 'n' declaration", head.line, head.col);
                expect_sym("=");
                doc.n = parse_int();
                expect_sym(";");
                have_n = true;
            } else if (head.text == "potential") {
                if (have_potential)
                    throw ParseError("duplicate 'potential' declaration", head.line, head.col);
                expect_sym("=");
                for (;;) {
                    doc.potential.push_back(parse_term(diagrammatic));
                    if (peek().kind == Token::Sym && peek().text == "+") {
                        next();
                        continue;
                    }
                    break;
                }
                expect_sym(";");
                have_potential = true;
            } else {
                throw ParseError("unknown statement '" + head.text + "'", head.line, head.col);
            }
        }
        if (!have_n) throw ParseError("missing 'n' declaration", peek().line, peek().col);
        return doc;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    Token expect_ident(const std::string& what) {
        Token t = next();
        if (t.kind != Token::Ident)
            throw ParseError("expected " + what, t.line, t.col);
        return t;
    }

    void expect_sym(const std::string& s) {
        Token t = next();
        if (t.kind != Token::Sym || t.text != s)
            throw ParseError("expected '" + s + "'", t.line, t.col);
    }

    static bool all_digits(const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    }

    Token expect_number(const std::string& what) {
        Token t = next();
        if (t.kind != Token::Ident || !all_digits(t.text))
            throw ParseError("expected " + what, t.line, t.col);
        return t;
    }

    int parse_int() {
        bool neg = false;
        if (peek().kind == Token::Sym && peek().text == "-") {
            neg = true;
            next();
        }
        Token t = expect_number("integer");
        long v = 0;
        try {
            v = std::stol(t.text);
        } catch (const std::exception&) {
            throw ParseError("integer out of range", t.line, t.col);
        }
        if (v > 1000000 || v < -1000000)
            throw ParseError("integer out of range", t.line, t.col);
        return static_cast<int>(neg ? -v : v);
    }

    Rational parse_rational() {
        bool neg = false;
        if (peek().kind == Token::Sym && peek().text == "-") {
            neg = true;
            next();
        }
        Token num = expect_number("coefficient");
        std::string repr = num.text;
        if (peek().kind == Token::Sym && peek().text == "/") {
            next();
            Token den = expect_number("denominator");
            if (den.text.find_first_not_of('0') == std::string::npos)
                throw ParseError("zero denominator", den.line, den.col);
            repr += "/" + den.text;
        }
        Rational r(repr);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }

    RawTerm parse_term(bool diagrammatic) {
        RawTerm term;
        term.line = peek().line;
        term.col = peek().col;
        term.coeff = parse_rational();
        while (peek().kind == Token::Ident)
            term.word.push_back(next().text);
        if (term.word.empty()) {
            const Token& t = peek();
            throw ParseError("expected a word of arrow names after the coefficient", t.line,
                             t.col);
        }
        if (diagrammatic) std::reverse(term.word.begin(), term.word.end());
        return term;
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

InputDocument parse_document(const std::string& text, bool diagrammatic) {
    Parser p(tokenize(text));
    return p.parse(diagrammatic);
}

std::string print_document(const InputDocument& doc) {
    std::ostringstream out;
    for (const auto& v : doc.vertices) out << "vertex " << v << ";\n";
    for (const auto& a : doc.arrows)
        out << "arrow " << a.name << " : " << a.source << " -> " << a.target << " deg "
            << a.degree << ";\n";
    out << "n = " << doc.n << ";\n";
    if (!doc.potential.empty()) {
        out << "potential =";
        bool first = true;
        for (const auto& t : doc.potential) {
            if (!first) out << " +";
            first = false;
            out << " " << rat_str(t.coeff);
            for (const auto& g : t.word) out << " " << g;
        }
        out << ";\n";
    }
    return out.str();
}

Elaborated elaborate(const InputDocument& doc) {
    Elaborated e;
    e.quiver = GradedQuiver::make(doc.vertices, doc.arrows);
    e.n = doc.n;
    if (e.n < 3) throw ParseError("n must be at least 3", 1, 1);
    e.potential = Potential(e.n);
    for (const auto& term : doc.potential) {
        std::vector<int> word;
        word.reserve(term.word.size());
        for (const auto& name : term.word) {
            int idx = e.quiver.arrow_index(name);
            if (idx < 0)
                throw ParseError("unknown arrow '" + name + "' in potential", term.line,
                                 term.col);
            word.push_back(idx);
        }
        std::optional<Path> p = make_path(e.quiver, word);
        if (!p)
            throw ParseError("potential word does not compose", term.line, term.col);
        if (source(e.quiver, *p) != target(e.quiver, *p))
            throw ParseError("potential word is not a cycle", term.line, term.col);
        e.potential.add_term(e.quiver, *p, term.coeff);
    }
    return e;
}

}  // namespace quipot
