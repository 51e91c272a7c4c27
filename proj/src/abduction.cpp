#include "bdabd/abduction.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace bdabd {

namespace {

std::set<std::string> hyp_vars(const std::vector<Literal>& hyps) {
    std::set<std::string> out;
    for (const Literal& l : hyps) out.insert(l.var);
    return out;
}

bool lit_less(const Literal& a, const Literal& b) {
    if (a.var != b.var) return a.var < b.var;
    return a.kind < b.kind;
}

// Classical rendering of the theory together with a candidate term, in
// the shape whose satisfiability and consequences mirror the
// four-valued ones (via the signed translation, plus the coupling
// constraint for @-problems).
ClassicalTheory encode(const AbductionProblem& p, const Term* tau) {
    ClassicalTheory out;
    for (const Formula& g : p.gamma) out.push_back(to_classical(nnf(g)));
    if (p.lang == TermLang::Triangle) {
        if (tau)
            for (const ClassicalFormula& l : term_to_classical_lits(*tau)) out.push_back(l);
    } else {
        if (tau)
            for (const ClassicalFormula& l : circ_term_counterpart_lits(*tau)) out.push_back(l);
        std::set<std::string> xi = props(p.gamma);
        auto more = props(p.observation);
        xi.insert(more.begin(), more.end());
        for (const std::string& v : hyp_vars(p.hyps)) xi.insert(v);
        if (tau)
            for (const Literal& l : tau->lits) xi.insert(l.var);
        out.push_back(circ_biconditional({xi.begin(), xi.end()}));
    }
    return out;
}

bool consistent_with_theory(const AbductionProblem& p, const Term& tau) {
    return classical_sat(encode(p, &tau)).has_value();
}

bool theory_term_entails_obs(const AbductionProblem& p, const Term& tau) {
    return classical_entails(encode(p, &tau), to_classical(nnf(p.observation)));
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        if (fn(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::optional<SolutionClass> solution_class_from_string(const std::string& name) {
    if (name == "all") return SolutionClass::All;
    if (name == "proper") return SolutionClass::Proper;
    if (name == "bd-minimal") return SolutionClass::BdMinimal;
    if (name == "theory-minimal") return SolutionClass::TheoryMinimal;
    return std::nullopt;
}

std::vector<Literal> default_hypotheses(const Theory& gamma, const Formula& chi, TermLang lang) {
    std::set<std::string> vars = props(gamma);
    auto more = props(chi);
    vars.insert(more.begin(), more.end());
    std::vector<LitKind> kinds =
        lang == TermLang::Triangle
            ? std::vector<LitKind>{LitKind::Pos, LitKind::NegP, LitKind::NegTri,
                                   LitKind::NegTriNeg}
            : std::vector<LitKind>{LitKind::Pos, LitKind::NegP, LitKind::CircA,
                                   LitKind::BulletA};
    std::vector<Literal> out;
    for (const std::string& v : vars)
        for (LitKind k : kinds) out.push_back({k, v});
    std::sort(out.begin(), out.end(), lit_less);
    return out;
}

AbductionProblem make_problem(Theory gamma, Formula chi, std::vector<Literal> hyps,
                              TermLang lang) {
    for (const Formula& g : gamma)
        if (!in_bd_fragment(g))
            throw ProblemError("theory member outside the plain fragment: " + to_string(g));
    if (!in_bd_fragment(chi))
        throw ProblemError("observation outside the plain fragment: " + to_string(chi));
    for (const Literal& l : hyps)
        if (!kind_in_lang(l.kind, lang))
            throw ProblemError("hypothesis " + l.to_string() +
                               " is outside the problem language");
    if (hyps.empty()) hyps = default_hypotheses(gamma, chi, lang);
    std::sort(hyps.begin(), hyps.end(), lit_less);
    hyps.erase(std::unique(hyps.begin(), hyps.end()), hyps.end());

    AbductionProblem p{std::move(gamma), std::move(chi), std::move(hyps), lang};
    if (classical_entails(encode(p, nullptr), to_classical(nnf(p.observation))))
        throw ProblemError("the theory already entails the observation");
    return p;
}

bool hyps_cover(const AbductionProblem& p, const Term& tau) {
    auto in_hyps = [&](const Literal& l) {
        return std::find(p.hyps.begin(), p.hyps.end(), l) != p.hyps.end();
    };
    for (const Literal& l : tau.lits) {
        if (in_hyps(l)) continue;
        // #p and p (resp. #!p and !p) are interchangeable hypotheses
        if (l.kind == LitKind::Pos && in_hyps({LitKind::TriPos, l.var})) continue;
        if (l.kind == LitKind::TriPos && in_hyps({LitKind::Pos, l.var})) continue;
        if (l.kind == LitKind::NegP && in_hyps({LitKind::TriNeg, l.var})) continue;
        if (l.kind == LitKind::TriNeg && in_hyps({LitKind::NegP, l.var})) continue;
        return false;
    }
    return true;
}

namespace {
void require_cover(const AbductionProblem& p, const Term& tau) {
    if (tau.lang != p.lang)
        throw ProblemError("candidate term language does not match the problem");
    if (!hyps_cover(p, tau))
        throw ProblemError("candidate uses a literal outside the hypothesis set: " +
                           tau.to_string());
}
}  // namespace

bool is_solution(const AbductionProblem& p, const Term& tau) {
    require_cover(p, tau);
    return consistent_with_theory(p, tau) && theory_term_entails_obs(p, tau);
}

bool is_proper_solution(const AbductionProblem& p, const Term& tau) {
    return is_solution(p, tau) && !term_entails_formula(tau, p.observation);
}

namespace {

// Candidate hypothesis sets strictly weaker than tau on one variable;
// used for the minimality check of @-terms.
std::vector<Term> circ_weakenings(const AbductionProblem& p, const Term& tau) {
    static const std::vector<LitKind> kAtomKinds = {LitKind::Pos, LitKind::NegP, LitKind::CircA,
                                                    LitKind::BulletA};
    std::vector<Term> out;
    PrefixProfile profile = prefix_profile(tau);
    for (const auto& [var, allowed] : profile) {
        for (unsigned mask = 0; mask < 16; ++mask) {
            std::vector<Literal> replacement;
            std::set<TruthValue> repl_allowed = {TruthValue::T, TruthValue::B, TruthValue::N,
                                                 TruthValue::F};
            for (std::size_t i = 0; i < 4; ++i) {
                if (!(mask & (1u << i))) continue;
                Literal l{kAtomKinds[i], var};
                replacement.push_back(l);
                std::set<TruthValue> vals;
                switch (l.kind) {
                    case LitKind::Pos: vals = {TruthValue::T, TruthValue::B}; break;
                    case LitKind::NegP: vals = {TruthValue::F, TruthValue::B}; break;
                    case LitKind::CircA: vals = {TruthValue::T, TruthValue::F}; break;
                    default: vals = {TruthValue::B, TruthValue::N}; break;
                }
                std::set<TruthValue> meet;
                std::set_intersection(repl_allowed.begin(), repl_allowed.end(), vals.begin(),
                                      vals.end(), std::inserter(meet, meet.begin()));
                repl_allowed = std::move(meet);
            }
            if (repl_allowed.empty()) continue;  // unsatisfiable replacement
            // strictly weaker on this variable only
            if (!std::includes(repl_allowed.begin(), repl_allowed.end(), allowed.begin(),
                               allowed.end()) ||
                repl_allowed == allowed)
                continue;
            bool covered = std::all_of(replacement.begin(), replacement.end(),
                                       [&](const Literal& l) {
                                           return std::find(p.hyps.begin(), p.hyps.end(), l) !=
                                                  p.hyps.end();
                                       });
            if (!covered) continue;
            std::vector<Literal> lits;
            for (const Literal& l : tau.lits)
                if (l.var != var) lits.push_back(l);
            lits.insert(lits.end(), replacement.begin(), replacement.end());
            out.emplace_back(TermLang::CircAtomic, std::move(lits));
        }
    }
    return out;
}

}  // namespace

bool is_bd_minimal(const AbductionProblem& p, const Term& tau) {
    if (!is_proper_solution(p, tau)) return false;
    std::vector<Term> candidates;
    if (p.lang == TermLang::Triangle) {
        Term flat = flatten_term(tau);
        for (const Literal& l : flat.lits) candidates.push_back(flat.without(l));
    } else {
        candidates = circ_weakenings(p, tau);
    }
    for (const Term& cand : candidates) {
        if (term_entails(cand, tau)) continue;  // weakly equivalent, not strictly weaker
        if (is_proper_solution(p, cand)) return false;
    }
    return true;
}

namespace {

// Hypotheses individually entailed modulo the theory; every term the
// theory and tau entail is a conjunction of these.
std::vector<Literal> entailed_hypotheses(const AbductionProblem& p, const Term& tau) {
    std::vector<Literal> out;
    for (const Literal& h : p.hyps)
        if (term_theory_entails(p.gamma, tau, Term(p.lang, {h}))) out.push_back(h);
    return out;
}

// First witness refuting theory-minimality of tau, if any.
std::optional<Term> theory_minimality_witness(const AbductionProblem& p, const Term& tau) {
    std::vector<Literal> pool = entailed_hypotheses(p, tau);
    if (pool.size() > 16)
        throw ResourceBoundError("theory-minimality search over " +
                                 std::to_string(pool.size()) +
                                 " entailed hypotheses exceeds the bound of 16");
    std::optional<Term> witness;
    for (std::size_t k = 1; k <= pool.size() && !witness; ++k) {
        for_each_combination(pool.size(), k, [&](const std::vector<std::size_t>& idx) {
            std::vector<Literal> lits;
            for (std::size_t i : idx) lits.push_back(pool[i]);
            Term cand(p.lang, std::move(lits));
            if (is_proper_solution(p, cand) && !term_theory_entails(p.gamma, cand, tau)) {
                witness = cand;
                return true;
            }
            return false;
        });
    }
    return witness;
}

}  // namespace

bool is_theory_minimal(const AbductionProblem& p, const Term& tau) {
    if (!is_proper_solution(p, tau)) return false;
    return !theory_minimality_witness(p, tau).has_value();
}

bool in_solution_class(const AbductionProblem& p, const Term& tau, SolutionClass cls) {
    switch (cls) {
        case SolutionClass::All: return is_solution(p, tau);
        case SolutionClass::Proper: return is_proper_solution(p, tau);
        case SolutionClass::BdMinimal: return is_bd_minimal(p, tau);
        case SolutionClass::TheoryMinimal: return is_theory_minimal(p, tau);
    }
    throw std::logic_error("unreachable solution class");
}

std::string describe_failure(const AbductionProblem& p, const Term& tau, SolutionClass cls) {
    require_cover(p, tau);
    if (!consistent_with_theory(p, tau)) return "inconsistent with the theory";
    if (!theory_term_entails_obs(p, tau))
        return "does not make the theory entail the observation";
    if (cls == SolutionClass::All) return "";
    if (term_entails_formula(tau, p.observation)) return "entails the observation by itself";
    if (cls == SolutionClass::Proper) return "";
    if (cls == SolutionClass::BdMinimal) {
        if (!is_bd_minimal(p, tau)) return "a strictly weaker proper solution exists";
        return "";
    }
    auto witness = theory_minimality_witness(p, tau);
    if (witness)
        return "a weaker proper solution modulo the theory exists: " + witness->to_string();
    return "";
}

std::vector<Term> enumerate_solutions(const AbductionProblem& p, SolutionClass cls,
                                      std::size_t max_size, bool dedup) {
    std::vector<Term> out;
    std::size_t cap = std::min(max_size, p.hyps.size());
    for (std::size_t k = 1; k <= cap; ++k) {
        std::size_t first_of_size = out.size();
        for_each_combination(p.hyps.size(), k, [&](const std::vector<std::size_t>& idx) {
            std::vector<Literal> lits;
            for (std::size_t i : idx) lits.push_back(p.hyps[i]);
            Term cand(p.lang, std::move(lits));
            if (cand.lits.size() != k) return false;  // duplicate literal collapse
            if (!in_solution_class(p, cand, cls)) return false;
            if (dedup) {
                for (std::size_t i = first_of_size; i < out.size(); ++i)
                    if (term_entails(out[i], cand) && term_entails(cand, out[i])) return false;
            }
            out.push_back(std::move(cand));
            return false;
        });
    }
    return out;
}

RelevanceResult is_relevant(const AbductionProblem& p, const Literal& h, SolutionClass cls,
                            std::size_t max_size) {
    auto sols = enumerate_solutions(p, cls, max_size, /*dedup=*/false);
    bool found = std::any_of(sols.begin(), sols.end(),
                             [&](const Term& t) { return t.has(h); });
    return {found, false};
}

RelevanceResult is_necessary(const AbductionProblem& p, const Literal& h, SolutionClass cls,
                             std::size_t max_size) {
    auto sols = enumerate_solutions(p, cls, max_size, /*dedup=*/false);
    if (sols.empty()) return {true, true};
    bool all = std::all_of(sols.begin(), sols.end(),
                           [&](const Term& t) { return t.has(h); });
    return {all, false};
}

// ---------------------------------------------------------------------------
// Classical counterpart problems

ClassicalFormula ClassicalLit::to_formula() const {
    ClassicalFormula v = ClassicalFormula::var(var);
    return pos ? v : ClassicalFormula::lnot(v);
}

std::string ClassicalLit::to_string() const { return pos ? var : "~" + var; }

ClassicalProblem reduce_triangle(const AbductionProblem& p) {
    if (p.lang != TermLang::Triangle)
        throw ProblemError("triangle reduction applied to an @-problem");
    ClassicalProblem out{{}, to_classical(nnf(p.observation)), {}};
    for (const Formula& g : p.gamma) out.theory.push_back(to_classical(nnf(g)));
    std::set<ClassicalLit> hyps;
    for (const Literal& h : p.hyps) {
        switch (h.kind) {
            case LitKind::Pos:
            case LitKind::TriPos: hyps.insert({signed_name(h.var, SignTag::Plus), true}); break;
            case LitKind::NegP:
            case LitKind::TriNeg: hyps.insert({signed_name(h.var, SignTag::Minus), true}); break;
            case LitKind::NegTri: hyps.insert({signed_name(h.var, SignTag::Plus), false}); break;
            case LitKind::NegTriNeg:
                hyps.insert({signed_name(h.var, SignTag::Minus), false});
                break;
            default: throw ProblemError("@-hypothesis in a #-problem");
        }
    }
    out.hyps.assign(hyps.begin(), hyps.end());
    return out;
}

ClassicalProblem reduce_circ(const AbductionProblem& p) {
    if (p.lang != TermLang::CircAtomic)
        throw ProblemError("@ reduction applied to a #-problem");
    std::set<std::string> xi = props(p.gamma);
    auto more = props(p.observation);
    xi.insert(more.begin(), more.end());
    for (const std::string& v : hyp_vars(p.hyps)) xi.insert(v);
    ClassicalFormula coupling = circ_biconditional({xi.begin(), xi.end()});

    ClassicalProblem out{{},
                         ClassicalFormula::lor(ClassicalFormula::lnot(coupling),
                                               to_classical(nnf(p.observation))),
                         {}};
    for (const Formula& g : p.gamma) out.theory.push_back(to_classical(nnf(g)));
    out.theory.push_back(coupling);
    std::set<ClassicalLit> hyps;
    for (const Literal& h : p.hyps) {
        switch (h.kind) {
            case LitKind::Pos: hyps.insert({signed_name(h.var, SignTag::Plus), true}); break;
            case LitKind::NegP: hyps.insert({signed_name(h.var, SignTag::Minus), true}); break;
            case LitKind::CircA: hyps.insert({signed_name(h.var, SignTag::Circ), true}); break;
            case LitKind::BulletA: hyps.insert({signed_name(h.var, SignTag::Circ), false}); break;
            default: throw ProblemError("#-hypothesis in an @-problem");
        }
    }
    out.hyps.assign(hyps.begin(), hyps.end());
    return out;
}

ClassicalProblem reduce(const AbductionProblem& p) {
    return p.lang == TermLang::Triangle ? reduce_triangle(p) : reduce_circ(p);
}

namespace {

ClassicalTheory with_term(const ClassicalTheory& theory, const std::vector<ClassicalLit>& term) {
    ClassicalTheory out = theory;
    for (const ClassicalLit& l : term) out.push_back(l.to_formula());
    return out;
}

bool cl_is_solution(const ClassicalProblem& p, const std::vector<ClassicalLit>& term) {
    ClassicalTheory extended = with_term(p.theory, term);
    return classical_sat(extended).has_value() && classical_entails(extended, p.observation);
}

bool cl_is_proper(const ClassicalProblem& p, const std::vector<ClassicalLit>& term) {
    if (!cl_is_solution(p, term)) return false;
    ClassicalTheory alone = with_term({}, term);
    return !classical_entails(alone, p.observation);
}

// all nonempty proper sub-conjunctions
bool cl_is_min(const ClassicalProblem& p, const std::vector<ClassicalLit>& term) {
    if (!cl_is_proper(p, term)) return false;
    std::size_t n = term.size();
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<ClassicalLit> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(term[i]);
        if (cl_is_proper(p, sub)) return false;
    }
    return true;
}

bool cl_is_theory_min(const ClassicalProblem& p, const std::vector<ClassicalLit>& term) {
    if (!cl_is_proper(p, term)) return false;
    ClassicalTheory extended = with_term(p.theory, term);
    std::vector<ClassicalLit> pool;
    for (const ClassicalLit& h : p.hyps)
        if (classical_entails(extended, h.to_formula())) pool.push_back(h);
    if (pool.size() > 16)
        throw ResourceBoundError("classical theory-minimality search over " +
                                 std::to_string(pool.size()) +
                                 " entailed hypotheses exceeds the bound of 16");
    ClassicalFormula tau_formula = ClassicalFormula::conj_all(with_term({}, term));
    bool minimal = true;
    for (std::size_t k = 1; k <= pool.size() && minimal; ++k) {
        for_each_combination(pool.size(), k, [&](const std::vector<std::size_t>& idx) {
            std::vector<ClassicalLit> cand;
            for (std::size_t i : idx) cand.push_back(pool[i]);
            if (cl_is_proper(p, cand) &&
                !classical_entails(with_term(p.theory, cand), tau_formula)) {
                minimal = false;
                return true;
            }
            return false;
        });
    }
    return minimal;
}

}  // namespace

std::vector<std::vector<ClassicalLit>> classical_solve(const ClassicalProblem& p,
                                                       SolutionClass cls,
                                                       std::size_t max_size) {
    std::vector<ClassicalLit> hyps = p.hyps;
    std::sort(hyps.begin(), hyps.end());
    hyps.erase(std::unique(hyps.begin(), hyps.end()), hyps.end());
    std::vector<std::vector<ClassicalLit>> out;
    std::size_t cap = std::min(max_size, hyps.size());
    for (std::size_t k = 1; k <= cap; ++k) {
        for_each_combination(hyps.size(), k, [&](const std::vector<std::size_t>& idx) {
            std::vector<ClassicalLit> cand;
            for (std::size_t i : idx) cand.push_back(hyps[i]);
            bool keep = false;
            switch (cls) {
                case SolutionClass::All: keep = cl_is_solution(p, cand); break;
                case SolutionClass::Proper: keep = cl_is_proper(p, cand); break;
                case SolutionClass::BdMinimal: keep = cl_is_min(p, cand); break;
                case SolutionClass::TheoryMinimal: keep = cl_is_theory_min(p, cand); break;
            }
            if (keep) out.push_back(std::move(cand));
            return false;
        });
    }
    return out;
}

Term map_back(const std::vector<ClassicalLit>& term, TermLang lang) {
    std::vector<Literal> lits;
    for (const ClassicalLit& l : term) {
        auto split = split_signed_name(l.var);
        if (!split)
            throw ProblemError("classical literal outside the reduction image: " +
                               l.to_string());
        auto [base, tag] = *split;
        if (lang == TermLang::Triangle) {
            switch (tag) {
                case SignTag::Plus:
                    lits.push_back({l.pos ? LitKind::Pos : LitKind::NegTri, base});
                    break;
                case SignTag::Minus:
                    lits.push_back({l.pos ? LitKind::NegP : LitKind::NegTriNeg, base});
                    break;
                case SignTag::Circ:
                    throw ProblemError("classical literal outside the reduction image: " +
                                       l.to_string());
            }
        } else {
            switch (tag) {
                case SignTag::Plus:
                case SignTag::Minus:
                    if (!l.pos)
                        throw ProblemError("classical literal outside the reduction image: " +
                                           l.to_string());
                    lits.push_back({tag == SignTag::Plus ? LitKind::Pos : LitKind::NegP, base});
                    break;
                case SignTag::Circ:
                    lits.push_back({l.pos ? LitKind::CircA : LitKind::BulletA, base});
                    break;
            }
        }
    }
    return Term(lang, std::move(lits));
}

AbductionProblem wrap_classical_problem(const ClassicalProblem& p) {
    std::vector<std::string> vars = classical_vars(p.theory);
    Theory gamma;
    for (const ClassicalFormula& g : p.theory) gamma.push_back(bd_from_classical(g));
    for (const std::string& q : vars) {
        Formula v = Formula::var(q);
        gamma.push_back(Formula::disj(v, Formula::neg(v)));
    }
    Formula chi = bd_from_classical(p.observation);
    for (const std::string& q : vars) {
        Formula v = Formula::var(q);
        chi = Formula::disj(chi, Formula::conj(v, Formula::neg(v)));
    }
    std::vector<Literal> hyps;
    for (const ClassicalLit& h : p.hyps) {
        if (!h.pos || split_signed_name(h.var))
            throw ProblemError("wrapping expects positive hypotheses over plain variables");
        hyps.push_back({LitKind::Pos, h.var});
    }
    return make_problem(std::move(gamma), std::move(chi), std::move(hyps), TermLang::Triangle);
}

std::vector<Term> solve(const AbductionProblem& p, SolutionClass cls, std::size_t max_size,
                        SolveRoute route) {
    if (route == SolveRoute::Native) return enumerate_solutions(p, cls, max_size);
    if (p.lang == TermLang::CircAtomic &&
        (cls == SolutionClass::BdMinimal || cls == SolutionClass::All))
        throw ProblemError(
            "the classical route for @-problems supports only the proper and "
            "theory-minimal classes");
    ClassicalProblem reduced = reduce(p);
    std::vector<Term> out;
    for (const auto& cl_term : classical_solve(reduced, cls, max_size))
        out.push_back(map_back(cl_term, p.lang));
    std::stable_sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
        if (a.lits.size() != b.lits.size()) return a.lits.size() < b.lits.size();
        return std::lexicographical_compare(a.lits.begin(), a.lits.end(), b.lits.begin(),
                                            b.lits.end(), lit_less);
    });
    std::vector<Term> dedup;
    for (const Term& t : out) {
        bool seen = std::any_of(dedup.begin(), dedup.end(), [&](const Term& u) {
            return u.lits.size() == t.lits.size() && term_entails(u, t) && term_entails(t, u);
        });
        if (!seen) dedup.push_back(t);
    }
    return dedup;
}

// ---------------------------------------------------------------------------
// Problem file format

namespace {
std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}
}  // namespace

AbductionProblem parse_problem_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Theory gamma;
    std::optional<Formula> chi;
    std::vector<Literal> hyps;
    std::optional<TermLang> lang;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw ProblemError("line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = trim(t.substr(0, colon));
        std::string value = trim(t.substr(colon + 1));
        try {
            if (key == "theory") {
                gamma.push_back(parse_formula(value));
            } else if (key == "observe") {
                if (chi)
                    throw ProblemError("line " + std::to_string(lineno) +
                                       ": duplicate 'observe'");
                chi = parse_formula(value);
            } else if (key == "hyp") {
                auto lit = literal_from_formula(parse_formula(value));
                if (!lit)
                    throw ProblemError("line " + std::to_string(lineno) +
                                       ": 'hyp' value is not a literal: " + value);
                hyps.push_back(*lit);
            } else if (key == "language") {
                if (lang)
                    throw ProblemError("line " + std::to_string(lineno) +
                                       ": duplicate 'language'");
                if (value == "circ")
                    lang = TermLang::CircAtomic;
                else if (value == "triangle")
                    lang = TermLang::Triangle;
                else
                    throw ProblemError("line " + std::to_string(lineno) +
                                       ": language must be 'circ' or 'triangle'");
            } else {
                throw ProblemError("line " + std::to_string(lineno) + ": unknown key '" + key +
                                   "'");
            }
        } catch (const ParseError& e) {
            throw ProblemError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!chi) throw ProblemError("missing 'observe' line");
    if (!lang) throw ProblemError("missing 'language' line");
    return make_problem(std::move(gamma), *chi, std::move(hyps), *lang);
}

AbductionProblem parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProblemError("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

std::string print_classical_problem(const ClassicalProblem& p) {
    std::ostringstream out;
    out << "classical: true\n";
    for (const ClassicalFormula& g : p.theory) out << "theory: " << to_string(g) << '\n';
    out << "observe: " << to_string(p.observation) << '\n';
    for (const ClassicalLit& h : p.hyps) out << "hyp: " << h.to_string() << '\n';
    return out.str();
}

}  // namespace bdabd
