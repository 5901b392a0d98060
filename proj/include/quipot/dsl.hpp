// Line-oriented input format for quivers with superpotential:
//   vertex <id>;
//   arrow <id> : <src> -> <tgt> deg <int>;
//   n = <int>;
//   potential = <rat> <word> (+ <rat> <word>)*;
// '#' starts a comment; words are whitespace-separated arrow names read
// right-to-left (the word "a b c" is the cycle abc, c applied first).
#pragma once

#include "quipot/potential.hpp"
#include "quipot/quiver.hpp"

namespace quipot {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

struct RawTerm {
    Rational coeff;
    std::vector<std::string> word;  // normalized to right-to-left convention
    int line = 0;
    int col = 0;
    friend bool operator==(const RawTerm& a, const RawTerm& b) {
        return a.coeff == b.coeff && a.word == b.word;  // positions don't count
    }
};

struct InputDocument {
    std::vector<std::string> vertices;
    std::vector<ArrowSpec> arrows;
    int n = 0;
    std::vector<RawTerm> potential;

    friend bool operator==(const InputDocument& a, const InputDocument& b) {
        auto arrows_eq = [](const ArrowSpec& x, const ArrowSpec& y) {
            return x.name == y.name && x.source == y.source && x.target == y.target &&
                   x.degree == y.degree;
        };
        if (!(a.vertices == b.vertices && a.n == b.n && a.potential == b.potential)) return false;
        if (a.arrows.size() != b.arrows.size()) return false;
        for (size_t i = 0; i < a.arrows.size(); ++i)
            if (!arrows_eq(a.arrows[i], b.arrows[i])) return false;
        return true;
    }
};

// diagrammatic = true reverses each potential word (input written in
// left-to-right application order); the stored document is always normalized.
InputDocument parse_document(const std::string& text, bool diagrammatic = false);

// Canonical text form; parse_document(print_document(d)) == d.
std::string print_document(const InputDocument& doc);

struct Elaborated {
    GradedQuiver quiver;
    int n = 0;
    Potential potential{3};
};

// Resolves names, checks composability and cycle-ness of potential words
// (ParseError with the term's position), and builds the Potential.
Elaborated elaborate(const InputDocument& doc);

}  // namespace quipot
