// Abduction problems, solution recognition under the two minimality
// notions, hypothesis relevance and necessity, bounded solution
// enumeration, and the round trip to classical propositional abduction.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdabd/terms.hpp"

namespace bdabd {

class ProblemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ResourceBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AbductionProblem {
    Theory gamma;                 // plain-fragment theory
    Formula observation;          // plain-fragment, not entailed by gamma
    std::vector<Literal> hyps;    // homogeneous in lang, sorted canonically
    TermLang lang;
};

enum class SolutionClass { All, Proper, BdMinimal, TheoryMinimal };

std::optional<SolutionClass> solution_class_from_string(const std::string& name);

/// All literal shapes of the language over the problem variables:
/// p, !p, !#p, !#!p per variable for #-problems (the #-prefixed shapes
/// collapse onto p and !p under flattening and are omitted), and
/// p, !p, @p, %p per variable for @-problems.
std::vector<Literal> default_hypotheses(const Theory& gamma, const Formula& chi, TermLang lang);

/// Validates fragments, hypothesis homogeneity, and non-entailment of
/// the observation.  Empty hyps selects the default set.
AbductionProblem make_problem(Theory gamma, Formula chi, std::vector<Literal> hyps,
                              TermLang lang);

bool hyps_cover(const AbductionProblem& p, const Term& tau);

bool is_solution(const AbductionProblem& p, const Term& tau);
bool is_proper_solution(const AbductionProblem& p, const Term& tau);
bool is_bd_minimal(const AbductionProblem& p, const Term& tau);
bool is_theory_minimal(const AbductionProblem& p, const Term& tau);

bool in_solution_class(const AbductionProblem& p, const Term& tau, SolutionClass cls);

/// Human-readable reason why tau fails the class, or empty when it
/// belongs to it.
std::string describe_failure(const AbductionProblem& p, const Term& tau, SolutionClass cls);

/// All class members with at most max_size literals, in size-then-lex
/// order.  With dedup, later terms weakly equivalent to an accepted
/// term of the same size are dropped.
std::vector<Term> enumerate_solutions(const AbductionProblem& p, SolutionClass cls,
                                      std::size_t max_size, bool dedup = true);

struct RelevanceResult {
    bool answer;
    bool vacuous;  // necessity over an empty solution set
};

RelevanceResult is_relevant(const AbductionProblem& p, const Literal& h, SolutionClass cls,
                            std::size_t max_size);
RelevanceResult is_necessary(const AbductionProblem& p, const Literal& h, SolutionClass cls,
                             std::size_t max_size);

// ---------------------------------------------------------------------------
// Classical counterpart problems

struct ClassicalLit {
    std::string var;
    bool pos;
    auto operator<=>(const ClassicalLit&) const = default;

    ClassicalFormula to_formula() const;
    std::string to_string() const;
};

struct ClassicalProblem {
    ClassicalTheory theory;
    ClassicalFormula observation;
    std::vector<ClassicalLit> hyps;
};

ClassicalProblem reduce_triangle(const AbductionProblem& p);
ClassicalProblem reduce_circ(const AbductionProblem& p);
ClassicalProblem reduce(const AbductionProblem& p);

std::vector<std::vector<ClassicalLit>> classical_solve(const ClassicalProblem& p,
                                                       SolutionClass cls, std::size_t max_size);

/// Inverse of the hypothesis mapping of the reductions; #-outputs come
/// out flattened.  Throws on literals outside the mapping's image.
Term map_back(const std::vector<ClassicalLit>& term, TermLang lang);

/// Four-valued problem whose proper solutions coincide with the
/// classical solutions of the input: each theory member is reread in
/// the four-valued syntax together with q|!q for each of its variables,
/// and the observation gains a q&!q disjunct per variable.  Input
/// hypotheses must be positive literals over plain variables.
AbductionProblem wrap_classical_problem(const ClassicalProblem& p);

enum class SolveRoute { Native, Classical };

/// Front door: native enumeration, or reduce + classical_solve +
/// map_back.  The classical route rejects the bd-minimal class for
/// @-problems, which the reduction does not preserve.
std::vector<Term> solve(const AbductionProblem& p, SolutionClass cls, std::size_t max_size,
                        SolveRoute route);

// ---------------------------------------------------------------------------
// Problem file format

/// Line-oriented format: `theory:` (repeatable), `observe:` (once),
/// `hyp:` (repeatable; none means the default set), `language:`
/// circ | triangle (once).  `#`-lines are comments; unknown keys are
/// errors.
AbductionProblem parse_problem_text(const std::string& text);
AbductionProblem parse_problem_file(const std::string& path);

/// Same key layout with a leading `classical: true` line.
std::string print_classical_problem(const ClassicalProblem& p);

}  // namespace bdabd
