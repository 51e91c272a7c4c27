#include "bdabd/literal.hpp"

#include <algorithm>

namespace bdabd {

bool is_propositional(LitKind k) { return k == LitKind::Pos || k == LitKind::NegP; }

bool is_triangle_kind(LitKind k) {
    return k != LitKind::CircA && k != LitKind::BulletA;
}

bool is_circ_atomic_kind(LitKind k) {
    switch (k) {
        case LitKind::Pos:
        case LitKind::NegP:
        case LitKind::CircA:
        case LitKind::BulletA: return true;
        default: return false;
    }
}

bool kind_in_lang(LitKind k, TermLang lang) {
    return lang == TermLang::Triangle ? is_triangle_kind(k) : is_circ_atomic_kind(k);
}

Formula Literal::to_formula() const {
    Formula p = Formula::var(var);
    switch (kind) {
        case LitKind::Pos: return p;
        case LitKind::NegP: return Formula::neg(p);
        case LitKind::TriPos: return Formula::tri(p);
        case LitKind::NegTri: return Formula::neg(Formula::tri(p));
        case LitKind::TriNeg: return Formula::tri(Formula::neg(p));
        case LitKind::NegTriNeg: return Formula::neg(Formula::tri(Formula::neg(p)));
        case LitKind::CircA: return Formula::circ(p);
        case LitKind::BulletA: return Formula::bullet(p);
    }
    throw std::logic_error("unreachable literal kind");
}

std::string Literal::to_string() const { return bdabd::to_string(to_formula()); }

Literal Literal::complement() const {
    switch (kind) {
        case LitKind::Pos: return {LitKind::NegP, var};
        case LitKind::NegP: return {LitKind::Pos, var};
        default:
            throw std::logic_error("complement is defined for propositional literals only: " +
                                   to_string());
    }
}

std::optional<Literal> literal_from_formula(const Formula& f) {
    switch (f.kind()) {
        case Conn::Var:
            return Literal{LitKind::Pos, f.var_name()};
        case Conn::Tri: {
            const Formula& g = f.child();
            if (g.kind() == Conn::Var) return Literal{LitKind::TriPos, g.var_name()};
            if (g.kind() == Conn::Neg && g.child().kind() == Conn::Var)
                return Literal{LitKind::TriNeg, g.child().var_name()};
            return std::nullopt;
        }
        case Conn::Circ:
            if (f.child().kind() == Conn::Var) return Literal{LitKind::CircA, f.child().var_name()};
            return std::nullopt;
        case Conn::Neg: {
            const Formula& g = f.child();
            if (g.kind() == Conn::Var) return Literal{LitKind::NegP, g.var_name()};
            if (g.kind() == Conn::Circ && g.child().kind() == Conn::Var)
                return Literal{LitKind::BulletA, g.child().var_name()};
            if (g.kind() == Conn::Tri) {
                const Formula& h = g.child();
                if (h.kind() == Conn::Var) return Literal{LitKind::NegTri, h.var_name()};
                if (h.kind() == Conn::Neg && h.child().kind() == Conn::Var)
                    return Literal{LitKind::NegTriNeg, h.child().var_name()};
            }
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

namespace {
// sort by variable first, then by kind
bool lit_less(const Literal& a, const Literal& b) {
    if (a.var != b.var) return a.var < b.var;
    return a.kind < b.kind;
}
}  // namespace

Term::Term(TermLang lang_, std::vector<Literal> lits_) : lang(lang_), lits(std::move(lits_)) {
    for (const Literal& l : lits)
        if (!kind_in_lang(l.kind, lang))
            throw TermShapeError("literal " + l.to_string() + " is outside the term language");
    std::sort(lits.begin(), lits.end(), lit_less);
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

bool Term::has(const Literal& l) const {
    return std::find(lits.begin(), lits.end(), l) != lits.end();
}

bool Term::has(LitKind k, const std::string& var) const { return has(Literal{k, var}); }

Term Term::without(const Literal& l) const {
    std::vector<Literal> rest;
    for (const Literal& x : lits)
        if (!(x == l)) rest.push_back(x);
    return Term(lang, std::move(rest));
}

Formula Term::to_formula() const {
    if (lits.empty()) {
        Constants c = constants();
        return lang == TermLang::Triangle ? c.top_tri : c.top_circ;
    }
    std::vector<Formula> parts;
    parts.reserve(lits.size());
    for (const Literal& l : lits) parts.push_back(l.to_formula());
    return Formula::conj_all(parts);
}

std::string Term::to_string() const { return bdabd::to_string(to_formula()); }

namespace {
void collect_conjuncts(const Formula& f, std::vector<Formula>& out) {
    if (f.kind() == Conn::And) {
        collect_conjuncts(f.lhs(), out);
        collect_conjuncts(f.rhs(), out);
    } else {
        out.push_back(f);
    }
}
}  // namespace

Term term_from_formula(const Formula& f, TermLang lang) {
    std::vector<Formula> conjuncts;
    collect_conjuncts(f, conjuncts);
    std::vector<Literal> lits;
    for (const Formula& c : conjuncts) {
        auto lit = literal_from_formula(c);
        if (!lit)
            throw TermShapeError("conjunct is not a literal: " + bdabd::to_string(c));
        if (!kind_in_lang(lit->kind, lang))
            throw TermShapeError("conjunct " + lit->to_string() +
                                 " is outside the requested term language");
        lits.push_back(*lit);
    }
    return Term(lang, std::move(lits));
}

}  // namespace bdabd
