// Two-valued side of the toolkit: classical formulas over signed
// variables, the #-fragment translation, embeddings of classical logic
// into the four-valued setting, countermodel transport in both
// directions, and a complete internal satisfiability procedure.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdabd/literal.hpp"
#include "bdabd/semantics.hpp"

namespace bdabd {

enum class CKind { Var, Not, And, Or, True, False };

class ClassicalFormula {
public:
    static ClassicalFormula var(std::string name);
    static ClassicalFormula lnot(ClassicalFormula f);
    static ClassicalFormula land(ClassicalFormula a, ClassicalFormula b);
    static ClassicalFormula lor(ClassicalFormula a, ClassicalFormula b);
    static ClassicalFormula top();
    static ClassicalFormula bottom();

    // empty list collapses to top / bottom respectively
    static ClassicalFormula conj_all(const std::vector<ClassicalFormula>& fs);
    static ClassicalFormula disj_all(const std::vector<ClassicalFormula>& fs);

    CKind kind() const;
    const std::string& var_name() const;
    const ClassicalFormula& child() const;
    const ClassicalFormula& lhs() const;
    const ClassicalFormula& rhs() const;

    bool operator==(const ClassicalFormula& other) const;

private:
    struct Node;
    explicit ClassicalFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

using ClassicalTheory = std::vector<ClassicalFormula>;

/// Prints with `~` for negation, `T`/`F` for the constants, and the
/// same precedence rules as the four-valued surface syntax.
std::string to_string(const ClassicalFormula& f);

std::vector<std::string> classical_vars(const ClassicalFormula& f);
std::vector<std::string> classical_vars(const ClassicalTheory& fs);

// ---------------------------------------------------------------------------
// Signed variables

enum class SignTag { Plus, Minus, Circ };

/// "p__pos", "p__neg", "p__circ".  User variables containing "__" are
/// rejected by the parser, so these never collide.
std::string signed_name(const std::string& base, SignTag tag);
std::optional<std::pair<std::string, SignTag>> split_signed_name(const std::string& name);

// ---------------------------------------------------------------------------
// Evaluation / satisfiability

using Assignment = std::map<std::string, bool>;  // unmapped variables read false

bool eval_classical(const Assignment& a, const ClassicalFormula& f);

std::string to_string(const Assignment& a);

/// Complete backtracking search with unit propagation over the clausal
/// form obtained by distribution.  Returns the lexicographically least
/// satisfying assignment (false < true, variables in name order) over
/// the variables of the input, or nullopt.
std::optional<Assignment> classical_sat(const ClassicalTheory& fs);

bool classical_entails(const ClassicalTheory& gamma, const ClassicalFormula& chi);

/// Assignment satisfying gamma but not chi, or nullopt.
std::optional<Assignment> classical_countermodel(const ClassicalTheory& gamma,
                                                 const ClassicalFormula& chi);

// ---------------------------------------------------------------------------
// Translations

/// Signed translation of an NNF #-fragment formula: p -> p__pos,
/// !p -> p__neg, #p -> p__pos, #!p -> p__neg, !#p -> ~p__pos,
/// !#!p -> ~p__neg, homomorphic on & and |.  Throws FragmentError on
/// anything else (in particular on non-NNF input or @).
ClassicalFormula to_classical(const Formula& f);

/// Same-name reading of a plain formula as a classical one and back;
/// used when classical problems are written in the four-valued surface
/// syntax.  bd_from_classical rejects the constants.
ClassicalFormula classical_from_bd(const Formula& f);
Formula bd_from_classical(const ClassicalFormula& f);

/// Variable-wise embeddings p -> #p and p -> @p.
Formula embed_triangle(const Formula& f);
Formula embed_circ(const Formula& f);

/// Wrapper making four-valued entailment simulate classical entailment:
/// ({phi & (p1|!p1) & ...}, chi | (p1&!p1) | ...) over the shared
/// variables.
std::pair<Theory, Formula> embed_cpl_entailment(const Formula& phi, const Formula& chi);

/// v^cl: p__pos true iff v(p) in {T,B}; p__neg true iff v(p) in {F,B};
/// with_circ adds p__circ true iff v(p) in {T,F}.
Assignment valuation_to_classical(const Valuation& v, const std::vector<std::string>& vars,
                                  bool with_circ);

/// v^4: four-case inverse of the plus/minus part of v^cl.
Valuation classical_to_valuation(const Assignment& a, const std::vector<std::string>& vars);

// ---------------------------------------------------------------------------
// Atomic @-term counterparts

/// Signed-literal conjuncts of an atomic @-term: p -> p__pos,
/// !p -> p__neg, @p -> p__circ, %p -> ~p__circ.
std::vector<ClassicalFormula> circ_term_counterpart_lits(const Term& term);

/// The coupling constraint over X: for each q in X,
/// ~q__circ <-> (q__pos <-> q__neg), expanded into &, |, ~.
ClassicalFormula circ_biconditional(const std::vector<std::string>& base_vars);

// ---------------------------------------------------------------------------
// Partial substitution and constant propagation

/// Replaces mapped variables by T/F, leaves the rest alone.
ClassicalFormula substitute(const ClassicalFormula& f, const Assignment& values);

/// Constant propagation: T&x -> x, F&x -> F, T|x -> T, F|x -> x,
/// ~T -> F, ~F -> T, applied bottom-up to a fixed point.
ClassicalFormula simplify(const ClassicalFormula& f);

bool is_top(const ClassicalFormula& f);
bool is_bottom(const ClassicalFormula& f);

}  // namespace bdabd
