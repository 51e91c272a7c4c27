// Literal and term taxonomy: the six #-literal shapes, the four atomic
// @-literal shapes, and conjunctions thereof with a language tag.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdabd/formula.hpp"

namespace bdabd {

// Kind order doubles as the canonical print/sort order within one
// variable: p < !p < #p < !#p < #!p < !#!p < @p < %p.
enum class LitKind {
    Pos,        // p
    NegP,       // !p
    TriPos,     // #p
    NegTri,     // !#p
    TriNeg,     // #!p
    NegTriNeg,  // !#!p
    CircA,      // @p
    BulletA,    // %p
};

bool is_propositional(LitKind k);
bool is_triangle_kind(LitKind k);     // first six
bool is_circ_atomic_kind(LitKind k);  // Pos, NegP, CircA, BulletA

struct Literal {
    LitKind kind;
    std::string var;

    Formula to_formula() const;
    std::string to_string() const;

    /// p <-> !p; throws on non-propositional kinds.
    Literal complement() const;

    auto operator<=>(const Literal&) const = default;
};

/// Parses one literal shape; nullopt when the formula is not a literal
/// of any kind.
std::optional<Literal> literal_from_formula(const Formula& f);

enum class TermLang { Triangle, CircAtomic };

bool kind_in_lang(LitKind k, TermLang lang);

/// Conjunction of literals, kept sorted and duplicate-free.  The empty
/// term is the trivially designated conjunction.
struct Term {
    TermLang lang;
    std::vector<Literal> lits;

    Term(TermLang lang, std::vector<Literal> lits);

    bool has(const Literal& l) const;
    bool has(LitKind k, const std::string& var) const;

    /// Term with one literal removed (by value); no-op if absent.
    Term without(const Literal& l) const;

    /// Conjunction as a Formula; the empty term renders as the
    /// always-designated constant of its language.
    Formula to_formula() const;
    std::string to_string() const;

    bool operator==(const Term&) const = default;
};

class TermShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a conjunction of literals off a formula.  Throws TermShapeError
/// naming the offending conjunct when some conjunct is not a literal of
/// the tagged language.
Term term_from_formula(const Formula& f, TermLang lang);

}  // namespace bdabd
