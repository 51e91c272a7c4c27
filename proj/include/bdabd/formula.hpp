// Formula AST for Belnap-Dunn logic and its expansions with the
// consistency operator (written @ in the surface syntax) and the
// information operator (written #).  The unreliability operator % is
// sugar for !@ and is desugared at parse time.
//
// Surface grammar (ASCII):
//   formula := or ; or := and ('|' and)* ; and := unary ('&' unary)*
//   unary   := ('!' | '@' | '#' | '%') unary | var | '(' formula ')'
//   var     := [a-z][a-zA-Z0-9_]*          (no "__" substring)
//
// Unary operators bind tighter than '&', which binds tighter than '|';
// binary operators associate to the left.

#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bdabd {

enum class Conn { Var, Neg, And, Or, Circ, Tri };

/// Which sub-language a formula lives in: plain {!,&,|}, with @, with #,
/// or both.
enum class FragmentTag { BD, Circ, Triangle, Full };

class Formula {
public:
    static Formula var(std::string name);
    static Formula neg(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula circ(Formula f);
    static Formula tri(Formula f);
    static Formula bullet(Formula f);  // !@f

    // n-ary helpers; throw on an empty list
    static Formula conj_all(const std::vector<Formula>& fs);
    static Formula disj_all(const std::vector<Formula>& fs);

    Conn kind() const;
    const std::string& var_name() const;
    const Formula& child() const;   // Neg / Circ / Tri
    const Formula& lhs() const;     // And / Or
    const Formula& rhs() const;

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

using Theory = std::vector<Formula>;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class FragmentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Formula parse_formula(std::string_view text);

std::string to_string(const Formula& f);

/// Canonical theory rendering: one formula per line, duplicates removed.
std::string to_string(const Theory& theory);

std::set<std::string> props(const Formula& f);
std::set<std::string> props(const Theory& theory);

FragmentTag fragment(const Formula& f);
bool in_bd_fragment(const Formula& f);

/// Negation normal form.  The result is built from literals p, !p, #p,
/// !#p, #!p, !#!p, @x, !@x using only & and |; @-subformulas are kept
/// opaque (negation stops at @).  Strongly equivalent to the input.
Formula nnf(const Formula& f);

/// phi-flat: remove every # of NNF(f) that is not in the scope of !.
/// Weakly equivalent to the input.
Formula flatten(const Formula& f);

/// Rewrite every @x into the #-definition
/// (#x & !#!x) | (#!x & !#x); strongly equivalent, @-free output.
Formula expand_circ(const Formula& f);

Formula to_dnf(const Formula& f);
Formula to_cnf(const Formula& f);

/// The definable constants: @@p and %@p evaluate to T and F everywhere,
/// as do #p|!#p and #p&!#p.
struct Constants {
    Formula top_circ;  // @@p
    Formula bot_circ;  // %@p
    Formula top_tri;   // #p | !#p
    Formula bot_tri;   // #p & !#p
};
Constants constants();

}  // namespace bdabd
