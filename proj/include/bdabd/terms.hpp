// Polynomial decision procedures over terms: satisfiability, term-term
// and theory-relative entailment, prefix profiles, and the two
// representability translations between the @ and # term languages.

#pragma once

#include <map>
#include <set>
#include <string>

#include "bdabd/classical.hpp"
#include "bdabd/literal.hpp"

namespace bdabd {

bool atomic_circ_sat(const Term& t);
bool triangle_term_sat(const Term& t);
bool term_sat(const Term& t);

/// TriPos -> Pos, TriNeg -> NegP; identity on the other kinds.
Term flatten_term(const Term& t);

/// Signed classical literals of a #-term, one per literal.
std::vector<ClassicalFormula> term_to_classical_lits(const Term& t);

/// Signed-variable values fixed by a #-term (after flattening):
/// p -> p__pos=1, !p -> p__neg=1, !#p -> p__pos=0, !#!p -> p__neg=0.
Assignment triangle_term_signs(const Term& t);

/// Entailment between atomic @-terms by the literal criteria; an
/// unsatisfiable left side entails everything, a satisfiable one never
/// entails an unsatisfiable right side.
bool atomic_circ_entails(const Term& sigma, const Term& sigma_prime);

/// Entailment between #-terms by flat literal-set containment.
bool triangle_term_entails(const Term& sigma, const Term& sigma_prime);

bool term_entails(const Term& sigma, const Term& sigma_prime);

/// Gamma, rho |= sigma for plain-fragment Gamma and #-terms, literal by
/// literal via signed substitution and constant propagation.
bool term_theory_entails_triangle(const Theory& gamma, const Term& rho, const Term& sigma);

/// Gamma, rho |= sigma for atomic @-terms through the signed classical
/// encoding with the coupling constraint.
bool term_theory_entails_circ(const Theory& gamma, const Term& rho, const Term& sigma);

bool term_theory_entails(const Theory& gamma, const Term& rho, const Term& sigma);

/// tau |= chi for a #-term and a plain-fragment chi: substitute the
/// term's signs into the signed translation of chi and reduce; entailed
/// iff everything collapses to T.  Unsatisfiable tau entails everything.
bool triangle_term_entails_formula(const Term& tau, const Formula& chi);

/// tau |= chi for an atomic @-term, via the classical encoding.
bool circ_term_entails_formula(const Term& tau, const Formula& chi);

bool term_entails_formula(const Term& tau, const Formula& chi);

/// Per-variable sets of admissible truth values of a satisfiable atomic
/// @-term; variables without literals are absent (all four admissible).
using PrefixProfile = std::map<std::string, std::set<TruthValue>>;

PrefixProfile prefix_profile(const Term& t);

/// Subset comparison: sigma entails sigma_prime iff each variable of
/// sigma_prime is constrained at least as tightly by sigma.
bool profile_entails(const PrefixProfile& sigma, const PrefixProfile& sigma_prime);

/// Every @p / %p variable also carries p or !p.
bool is_determined(const Term& t);

/// Every !#l (after flattening) is accompanied by the complement of l.
bool is_n_free(const Term& t);

/// Determined atomic @-term -> weakly equivalent #-term
/// (l & @l becomes #l & !#l-bar; l & %l becomes l & l-bar).
Term circ_to_triangle(const Term& t);

/// N-free #-term -> weakly equivalent atomic @-term
/// (l & !#l-bar becomes l & @l, after flattening).
Term triangle_to_circ(const Term& t);

}  // namespace bdabd
