#include "bdabd/terms.hpp"

#include <algorithm>

namespace bdabd {

namespace {

void require_lang(const Term& t, TermLang lang, const char* what) {
    if (t.lang != lang) throw TermShapeError(std::string(what) + ": wrong term language");
}

std::set<std::string> term_vars(const Term& t) {
    std::set<std::string> out;
    for (const Literal& l : t.lits) out.insert(l.var);
    return out;
}

// literal kinds of one variable as a small set
std::set<LitKind> kinds_of(const Term& t, const std::string& var) {
    std::set<LitKind> out;
    for (const Literal& l : t.lits)
        if (l.var == var) out.insert(l.kind);
    return out;
}

void require_bd_theory(const Theory& gamma) {
    for (const Formula& f : gamma)
        if (!in_bd_fragment(f))
            throw FragmentError("theory member outside the plain fragment: " + to_string(f));
}

void require_bd_formula(const Formula& chi) {
    if (!in_bd_fragment(chi))
        throw FragmentError("observation outside the plain fragment: " + to_string(chi));
}

}  // namespace

bool atomic_circ_sat(const Term& t) {
    require_lang(t, TermLang::CircAtomic, "atomic_circ_sat");
    for (const std::string& v : term_vars(t)) {
        auto ks = kinds_of(t, v);
        if (ks.contains(LitKind::CircA) && ks.contains(LitKind::BulletA)) return false;
        if (ks.contains(LitKind::CircA) && ks.contains(LitKind::Pos) &&
            ks.contains(LitKind::NegP))
            return false;
    }
    return true;
}

bool triangle_term_sat(const Term& t) {
    require_lang(t, TermLang::Triangle, "triangle_term_sat");
    Term flat = flatten_term(t);
    for (const std::string& v : term_vars(flat)) {
        auto ks = kinds_of(flat, v);
        if (ks.contains(LitKind::Pos) && ks.contains(LitKind::NegTri)) return false;
        if (ks.contains(LitKind::NegP) && ks.contains(LitKind::NegTriNeg)) return false;
    }
    return true;
}

bool term_sat(const Term& t) {
    return t.lang == TermLang::Triangle ? triangle_term_sat(t) : atomic_circ_sat(t);
}

Term flatten_term(const Term& t) {
    require_lang(t, TermLang::Triangle, "flatten_term");
    std::vector<Literal> out;
    for (const Literal& l : t.lits) {
        if (l.kind == LitKind::TriPos)
            out.push_back({LitKind::Pos, l.var});
        else if (l.kind == LitKind::TriNeg)
            out.push_back({LitKind::NegP, l.var});
        else
            out.push_back(l);
    }
    return Term(TermLang::Triangle, std::move(out));
}

std::vector<ClassicalFormula> term_to_classical_lits(const Term& t) {
    require_lang(t, TermLang::Triangle, "term_to_classical_lits");
    std::vector<ClassicalFormula> out;
    for (const Literal& l : t.lits) {
        switch (l.kind) {
            case LitKind::Pos:
            case LitKind::TriPos:
                out.push_back(ClassicalFormula::var(signed_name(l.var, SignTag::Plus)));
                break;
            case LitKind::NegP:
            case LitKind::TriNeg:
                out.push_back(ClassicalFormula::var(signed_name(l.var, SignTag::Minus)));
                break;
            case LitKind::NegTri:
                out.push_back(ClassicalFormula::lnot(
                    ClassicalFormula::var(signed_name(l.var, SignTag::Plus))));
                break;
            case LitKind::NegTriNeg:
                out.push_back(ClassicalFormula::lnot(
                    ClassicalFormula::var(signed_name(l.var, SignTag::Minus))));
                break;
            default:
                throw TermShapeError("@-literal in a #-term");
        }
    }
    return out;
}

Assignment triangle_term_signs(const Term& t) {
    Term flat = flatten_term(t);
    Assignment a;
    for (const Literal& l : flat.lits) {
        switch (l.kind) {
            case LitKind::Pos: a[signed_name(l.var, SignTag::Plus)] = true; break;
            case LitKind::NegP: a[signed_name(l.var, SignTag::Minus)] = true; break;
            case LitKind::NegTri: a[signed_name(l.var, SignTag::Plus)] = false; break;
            case LitKind::NegTriNeg: a[signed_name(l.var, SignTag::Minus)] = false; break;
            default: throw TermShapeError("@-literal in a #-term");
        }
    }
    return a;
}

bool atomic_circ_entails(const Term& sigma, const Term& sigma_prime) {
    require_lang(sigma, TermLang::CircAtomic, "atomic_circ_entails");
    require_lang(sigma_prime, TermLang::CircAtomic, "atomic_circ_entails");
    if (!atomic_circ_sat(sigma)) return true;
    if (!atomic_circ_sat(sigma_prime)) return false;
    for (const Literal& l : sigma_prime.lits) {
        switch (l.kind) {
            case LitKind::CircA:
                if (!sigma.has(l)) return false;
                break;
            case LitKind::BulletA:
                if (!sigma.has(l) &&
                    !(sigma.has(LitKind::Pos, l.var) && sigma.has(LitKind::NegP, l.var)))
                    return false;
                break;
            case LitKind::Pos:
            case LitKind::NegP:
                if (!sigma.has(l) && !(sigma.has(l.complement()) &&
                                       sigma.has(LitKind::BulletA, l.var)))
                    return false;
                break;
            default:
                throw TermShapeError("#-literal in an atomic @-term");
        }
    }
    return true;
}

bool triangle_term_entails(const Term& sigma, const Term& sigma_prime) {
    require_lang(sigma, TermLang::Triangle, "triangle_term_entails");
    require_lang(sigma_prime, TermLang::Triangle, "triangle_term_entails");
    if (!triangle_term_sat(sigma)) return true;
    if (!triangle_term_sat(sigma_prime)) return false;
    Term flat = flatten_term(sigma);
    Term flat_prime = flatten_term(sigma_prime);
    return std::all_of(flat_prime.lits.begin(), flat_prime.lits.end(),
                       [&](const Literal& l) { return flat.has(l); });
}

bool term_entails(const Term& sigma, const Term& sigma_prime) {
    if (sigma.lang != sigma_prime.lang)
        throw TermShapeError("term_entails: mixed term languages");
    return sigma.lang == TermLang::Triangle ? triangle_term_entails(sigma, sigma_prime)
                                            : atomic_circ_entails(sigma, sigma_prime);
}

namespace {

// Flat literal of !#l for a #-literal l.
Literal neg_tri_of(const Literal& l) {
    switch (l.kind) {
        case LitKind::Pos:
        case LitKind::TriPos: return {LitKind::NegTri, l.var};
        case LitKind::NegP:
        case LitKind::TriNeg: return {LitKind::NegTriNeg, l.var};
        case LitKind::NegTri: return {LitKind::Pos, l.var};
        case LitKind::NegTriNeg: return {LitKind::NegP, l.var};
        default: throw TermShapeError("@-literal in a #-term");
    }
}

}  // namespace

bool term_theory_entails_triangle(const Theory& gamma, const Term& rho, const Term& sigma) {
    require_lang(rho, TermLang::Triangle, "term_theory_entails_triangle");
    require_lang(sigma, TermLang::Triangle, "term_theory_entails_triangle");
    require_bd_theory(gamma);
    Term rho_flat = flatten_term(rho);
    for (const Literal& l : sigma.lits) {
        std::vector<Literal> extended = rho_flat.lits;
        extended.push_back(neg_tri_of(l));
        Term rho_prime(TermLang::Triangle, std::move(extended));
        if (!triangle_term_sat(rho_prime)) continue;
        Assignment signs = triangle_term_signs(rho_prime);
        bool refuted = false;
        for (const Formula& g : gamma) {
            ClassicalFormula reduced = simplify(substitute(to_classical(nnf(g)), signs));
            if (is_bottom(reduced)) {
                refuted = true;
                break;
            }
        }
        if (!refuted) return false;
    }
    return true;
}

bool term_theory_entails_circ(const Theory& gamma, const Term& rho, const Term& sigma) {
    require_lang(rho, TermLang::CircAtomic, "term_theory_entails_circ");
    require_lang(sigma, TermLang::CircAtomic, "term_theory_entails_circ");
    require_bd_theory(gamma);
    std::set<std::string> xi = props(gamma);
    for (const std::string& v : term_vars(rho)) xi.insert(v);
    for (const std::string& v : term_vars(sigma)) xi.insert(v);
    ClassicalTheory theory_cl;
    for (const Formula& g : gamma) theory_cl.push_back(to_classical(nnf(g)));
    for (const ClassicalFormula& l : circ_term_counterpart_lits(rho)) theory_cl.push_back(l);
    theory_cl.push_back(circ_biconditional({xi.begin(), xi.end()}));
    ClassicalFormula goal = ClassicalFormula::conj_all(circ_term_counterpart_lits(sigma));
    return classical_entails(theory_cl, goal);
}

bool term_theory_entails(const Theory& gamma, const Term& rho, const Term& sigma) {
    if (rho.lang != sigma.lang)
        throw TermShapeError("term_theory_entails: mixed term languages");
    return rho.lang == TermLang::Triangle ? term_theory_entails_triangle(gamma, rho, sigma)
                                          : term_theory_entails_circ(gamma, rho, sigma);
}

bool triangle_term_entails_formula(const Term& tau, const Formula& chi) {
    require_lang(tau, TermLang::Triangle, "triangle_term_entails_formula");
    require_bd_formula(chi);
    if (!triangle_term_sat(tau)) return true;
    Assignment signs = triangle_term_signs(tau);
    ClassicalFormula reduced = simplify(substitute(to_classical(nnf(chi)), signs));
    return is_top(reduced);
}

bool circ_term_entails_formula(const Term& tau, const Formula& chi) {
    require_lang(tau, TermLang::CircAtomic, "circ_term_entails_formula");
    require_bd_formula(chi);
    std::set<std::string> xi = props(chi);
    for (const std::string& v : term_vars(tau)) xi.insert(v);
    ClassicalTheory theory_cl = circ_term_counterpart_lits(tau);
    theory_cl.push_back(circ_biconditional({xi.begin(), xi.end()}));
    return classical_entails(theory_cl, to_classical(nnf(chi)));
}

bool term_entails_formula(const Term& tau, const Formula& chi) {
    return tau.lang == TermLang::Triangle ? triangle_term_entails_formula(tau, chi)
                                          : circ_term_entails_formula(tau, chi);
}

namespace {
std::set<TruthValue> allowed_values(LitKind k) {
    using TV = TruthValue;
    switch (k) {
        case LitKind::Pos: return {TV::T, TV::B};
        case LitKind::NegP: return {TV::F, TV::B};
        case LitKind::CircA: return {TV::T, TV::F};
        case LitKind::BulletA: return {TV::B, TV::N};
        default: throw TermShapeError("#-literal in an atomic @-term");
    }
}
}  // namespace

PrefixProfile prefix_profile(const Term& t) {
    require_lang(t, TermLang::CircAtomic, "prefix_profile");
    PrefixProfile out;
    for (const Literal& l : t.lits) {
        std::set<TruthValue> vals = allowed_values(l.kind);
        auto [it, inserted] = out.emplace(l.var, vals);
        if (!inserted) {
            std::set<TruthValue> meet;
            std::set_intersection(it->second.begin(), it->second.end(), vals.begin(), vals.end(),
                                  std::inserter(meet, meet.begin()));
            it->second = std::move(meet);
        }
        if (it->second.empty())
            throw std::invalid_argument("prefix profile of an unsatisfiable term: " +
                                        t.to_string());
    }
    return out;
}

bool profile_entails(const PrefixProfile& sigma, const PrefixProfile& sigma_prime) {
    for (const auto& [var, allowed_prime] : sigma_prime) {
        auto it = sigma.find(var);
        if (it == sigma.end()) {
            if (allowed_prime.size() < 4) return false;
            continue;
        }
        if (!std::includes(allowed_prime.begin(), allowed_prime.end(), it->second.begin(),
                           it->second.end()))
            return false;
    }
    return true;
}

bool is_determined(const Term& t) {
    require_lang(t, TermLang::CircAtomic, "is_determined");
    if (!atomic_circ_sat(t))
        throw std::invalid_argument("determinedness of an unsatisfiable term: " + t.to_string());
    for (const std::string& v : term_vars(t)) {
        auto ks = kinds_of(t, v);
        if ((ks.contains(LitKind::CircA) || ks.contains(LitKind::BulletA)) &&
            !ks.contains(LitKind::Pos) && !ks.contains(LitKind::NegP))
            return false;
    }
    return true;
}

bool is_n_free(const Term& t) {
    require_lang(t, TermLang::Triangle, "is_n_free");
    if (!triangle_term_sat(t))
        throw std::invalid_argument("N-freeness of an unsatisfiable term: " + t.to_string());
    Term flat = flatten_term(t);
    for (const std::string& v : term_vars(flat)) {
        auto ks = kinds_of(flat, v);
        if (ks.contains(LitKind::NegTri) && !ks.contains(LitKind::NegP)) return false;
        if (ks.contains(LitKind::NegTriNeg) && !ks.contains(LitKind::Pos)) return false;
    }
    return true;
}

Term circ_to_triangle(const Term& t) {
    if (!is_determined(t))
        throw std::invalid_argument("term is not determined: " + t.to_string());
    std::vector<Literal> out;
    for (const std::string& v : term_vars(t)) {
        auto ks = kinds_of(t, v);
        bool circ = ks.contains(LitKind::CircA);
        if (circ && ks.contains(LitKind::Pos)) {
            out.push_back({LitKind::TriPos, v});
            out.push_back({LitKind::NegTriNeg, v});
        }
        if (circ && ks.contains(LitKind::NegP)) {
            out.push_back({LitKind::TriNeg, v});
            out.push_back({LitKind::NegTri, v});
        }
        if (ks.contains(LitKind::BulletA)) {
            out.push_back({LitKind::Pos, v});
            out.push_back({LitKind::NegP, v});
        }
        if (!circ) {
            if (ks.contains(LitKind::Pos)) out.push_back({LitKind::Pos, v});
            if (ks.contains(LitKind::NegP)) out.push_back({LitKind::NegP, v});
        }
    }
    return Term(TermLang::Triangle, std::move(out));
}

Term triangle_to_circ(const Term& t) {
    if (!is_n_free(t))
        throw std::invalid_argument("term is not N-free: " + t.to_string());
    Term flat = flatten_term(t);
    std::vector<Literal> out;
    for (const std::string& v : term_vars(flat)) {
        auto ks = kinds_of(flat, v);
        if (ks.contains(LitKind::NegTriNeg)) {
            out.push_back({LitKind::Pos, v});
            out.push_back({LitKind::CircA, v});
        } else if (ks.contains(LitKind::Pos)) {
            out.push_back({LitKind::Pos, v});
        }
        if (ks.contains(LitKind::NegTri)) {
            out.push_back({LitKind::NegP, v});
            out.push_back({LitKind::CircA, v});
        } else if (ks.contains(LitKind::NegP)) {
            out.push_back({LitKind::NegP, v});
        }
    }
    return Term(TermLang::CircAtomic, std::move(out));
}

}  // namespace bdabd
