#include "bdabd/classical.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bdabd {

struct ClassicalFormula::Node {
    CKind kind;
    std::string name;
    std::vector<ClassicalFormula> kids;
};

ClassicalFormula ClassicalFormula::var(std::string name) {
    return ClassicalFormula(std::make_shared<const Node>(Node{CKind::Var, std::move(name), {}}));
}
ClassicalFormula ClassicalFormula::lnot(ClassicalFormula f) {
    return ClassicalFormula(std::make_shared<const Node>(Node{CKind::Not, "", {std::move(f)}}));
}
ClassicalFormula ClassicalFormula::land(ClassicalFormula a, ClassicalFormula b) {
    return ClassicalFormula(
        std::make_shared<const Node>(Node{CKind::And, "", {std::move(a), std::move(b)}}));
}
ClassicalFormula ClassicalFormula::lor(ClassicalFormula a, ClassicalFormula b) {
    return ClassicalFormula(
        std::make_shared<const Node>(Node{CKind::Or, "", {std::move(a), std::move(b)}}));
}
ClassicalFormula ClassicalFormula::top() {
    return ClassicalFormula(std::make_shared<const Node>(Node{CKind::True, "", {}}));
}
ClassicalFormula ClassicalFormula::bottom() {
    return ClassicalFormula(std::make_shared<const Node>(Node{CKind::False, "", {}}));
}

ClassicalFormula ClassicalFormula::conj_all(const std::vector<ClassicalFormula>& fs) {
    if (fs.empty()) return top();
    ClassicalFormula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = land(acc, fs[i]);
    return acc;
}
ClassicalFormula ClassicalFormula::disj_all(const std::vector<ClassicalFormula>& fs) {
    if (fs.empty()) return bottom();
    ClassicalFormula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = lor(acc, fs[i]);
    return acc;
}

CKind ClassicalFormula::kind() const { return node_->kind; }

const std::string& ClassicalFormula::var_name() const {
    if (node_->kind != CKind::Var) throw std::logic_error("var_name on non-variable");
    return node_->name;
}
const ClassicalFormula& ClassicalFormula::child() const {
    if (node_->kids.size() != 1) throw std::logic_error("child on non-unary node");
    return node_->kids[0];
}
const ClassicalFormula& ClassicalFormula::lhs() const {
    if (node_->kids.size() != 2) throw std::logic_error("lhs on non-binary node");
    return node_->kids[0];
}
const ClassicalFormula& ClassicalFormula::rhs() const {
    if (node_->kids.size() != 2) throw std::logic_error("rhs on non-binary node");
    return node_->kids[1];
}

bool ClassicalFormula::operator==(const ClassicalFormula& other) const {
    if (node_ == other.node_) return true;
    if (node_->kind != other.node_->kind) return false;
    if (node_->kind == CKind::Var) return node_->name == other.node_->name;
    if (node_->kids.size() != other.node_->kids.size()) return false;
    for (std::size_t i = 0; i < node_->kids.size(); ++i)
        if (!(node_->kids[i] == other.node_->kids[i])) return false;
    return true;
}

namespace {

int cprec(const ClassicalFormula& f) {
    switch (f.kind()) {
        case CKind::Or: return 1;
        case CKind::And: return 2;
        case CKind::Not: return 3;
        default: return 4;
    }
}

void cprint(std::ostringstream& out, const ClassicalFormula& f, int min_prec) {
    bool parens = cprec(f) < min_prec;
    if (parens) out << '(';
    switch (f.kind()) {
        case CKind::Var: out << f.var_name(); break;
        case CKind::True: out << 'T'; break;
        case CKind::False: out << 'F'; break;
        case CKind::Not:
            out << '~';
            cprint(out, f.child(), 3);
            break;
        case CKind::And:
            cprint(out, f.lhs(), 2);
            out << " & ";
            cprint(out, f.rhs(), 3);
            break;
        case CKind::Or:
            cprint(out, f.lhs(), 1);
            out << " | ";
            cprint(out, f.rhs(), 2);
            break;
    }
    if (parens) out << ')';
}

void collect_cvars(const ClassicalFormula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case CKind::Var: out.insert(f.var_name()); break;
        case CKind::Not: collect_cvars(f.child(), out); break;
        case CKind::And:
        case CKind::Or:
            collect_cvars(f.lhs(), out);
            collect_cvars(f.rhs(), out);
            break;
        default: break;
    }
}

}  // namespace

std::string to_string(const ClassicalFormula& f) {
    std::ostringstream out;
    cprint(out, f, 0);
    return out.str();
}

std::vector<std::string> classical_vars(const ClassicalFormula& f) {
    std::set<std::string> s;
    collect_cvars(f, s);
    return {s.begin(), s.end()};
}

std::vector<std::string> classical_vars(const ClassicalTheory& fs) {
    std::set<std::string> s;
    for (const auto& f : fs) collect_cvars(f, s);
    return {s.begin(), s.end()};
}

std::string signed_name(const std::string& base, SignTag tag) {
    switch (tag) {
        case SignTag::Plus: return base + "__pos";
        case SignTag::Minus: return base + "__neg";
        case SignTag::Circ: return base + "__circ";
    }
    throw std::logic_error("unreachable sign tag");
}

std::optional<std::pair<std::string, SignTag>> split_signed_name(const std::string& name) {
    auto ends_with = [&](const std::string& suffix) {
        return name.size() > suffix.size() &&
               name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with("__pos")) return {{name.substr(0, name.size() - 5), SignTag::Plus}};
    if (ends_with("__neg")) return {{name.substr(0, name.size() - 5), SignTag::Minus}};
    if (ends_with("__circ")) return {{name.substr(0, name.size() - 6), SignTag::Circ}};
    return std::nullopt;
}

bool eval_classical(const Assignment& a, const ClassicalFormula& f) {
    switch (f.kind()) {
        case CKind::Var: {
            auto it = a.find(f.var_name());
            return it != a.end() && it->second;
        }
        case CKind::True: return true;
        case CKind::False: return false;
        case CKind::Not: return !eval_classical(a, f.child());
        case CKind::And: return eval_classical(a, f.lhs()) && eval_classical(a, f.rhs());
        case CKind::Or: return eval_classical(a, f.lhs()) || eval_classical(a, f.rhs());
    }
    throw std::logic_error("unreachable connective");
}

std::string to_string(const Assignment& a) {
    std::string out;
    for (const auto& [name, value] : a) {
        if (!out.empty()) out += ", ";
        out += name;
        out += '=';
        out += value ? '1' : '0';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Clausal form + DPLL

namespace {

struct CLit {
    std::string var;
    bool pos;
    auto operator<=>(const CLit&) const = default;
};

using Clause = std::vector<CLit>;  // sorted, unique

// Returns false when the clause is tautological.
bool add_lit(Clause& c, CLit l) {
    auto it = std::lower_bound(c.begin(), c.end(), l);
    if (it != c.end() && *it == l) return true;
    if (std::any_of(c.begin(), c.end(),
                    [&](const CLit& x) { return x.var == l.var && x.pos != l.pos; }))
        return false;
    c.insert(it, l);
    return true;
}

// Clauses of f (positive=true) or of ~f (positive=false); negation is
// pushed inward on the fly.  A dropped tautological clause is simply
// omitted; an empty clause means unsatisfiable.
void clauses_of(const ClassicalFormula& f, bool positive, std::vector<Clause>& out);

std::vector<Clause> disj_clauses(const ClassicalFormula& a, bool pa, const ClassicalFormula& b,
                                 bool pb) {
    std::vector<Clause> left, right, out;
    clauses_of(a, pa, left);
    clauses_of(b, pb, right);
    for (const Clause& x : left)
        for (const Clause& y : right) {
            Clause merged = x;
            bool ok = true;
            for (const CLit& l : y)
                if (!add_lit(merged, l)) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(std::move(merged));
        }
    return out;
}

void clauses_of(const ClassicalFormula& f, bool positive, std::vector<Clause>& out) {
    switch (f.kind()) {
        case CKind::Var:
            out.push_back({CLit{f.var_name(), positive}});
            return;
        case CKind::True:
            if (!positive) out.push_back({});
            return;
        case CKind::False:
            if (positive) out.push_back({});
            return;
        case CKind::Not:
            clauses_of(f.child(), !positive, out);
            return;
        case CKind::And:
            if (positive) {
                clauses_of(f.lhs(), true, out);
                clauses_of(f.rhs(), true, out);
            } else {
                auto cs = disj_clauses(f.lhs(), false, f.rhs(), false);
                out.insert(out.end(), cs.begin(), cs.end());
            }
            return;
        case CKind::Or:
            if (positive) {
                auto cs = disj_clauses(f.lhs(), true, f.rhs(), true);
                out.insert(out.end(), cs.begin(), cs.end());
            } else {
                clauses_of(f.lhs(), false, out);
                clauses_of(f.rhs(), false, out);
            }
            return;
    }
    throw std::logic_error("unreachable connective");
}

enum class ClauseState { Satisfied, Empty, Unit, Open };

ClauseState clause_state(const Clause& c, const Assignment& a, CLit* unit) {
    int open = 0;
    for (const CLit& l : c) {
        auto it = a.find(l.var);
        if (it == a.end()) {
            if (open == 0 && unit) *unit = l;
            ++open;
        } else if (it->second == l.pos) {
            return ClauseState::Satisfied;
        }
    }
    if (open == 0) return ClauseState::Empty;
    if (open == 1) return ClauseState::Unit;
    return ClauseState::Open;
}

// Branches on variables in name order, false first, so the first model
// found is the lexicographically least one.
bool dpll(const std::vector<Clause>& clauses, const std::vector<std::string>& vars,
          Assignment& a) {
    for (;;) {
        bool changed = false;
        bool all_satisfied = true;
        for (const Clause& c : clauses) {
            CLit unit;
            switch (clause_state(c, a, &unit)) {
                case ClauseState::Empty: return false;
                case ClauseState::Unit:
                    a[unit.var] = unit.pos;
                    changed = true;
                    break;
                case ClauseState::Open: all_satisfied = false; break;
                case ClauseState::Satisfied: break;
            }
        }
        if (changed) continue;
        if (all_satisfied) {
            for (const std::string& v : vars)
                if (!a.contains(v)) a[v] = false;
            return true;
        }
        break;
    }
    auto it = std::find_if(vars.begin(), vars.end(),
                           [&](const std::string& v) { return !a.contains(v); });
    if (it == vars.end()) return false;  // all assigned yet some clause open: impossible
    for (bool value : {false, true}) {
        Assignment trial = a;
        trial[*it] = value;
        if (dpll(clauses, vars, trial)) {
            a = std::move(trial);
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<Assignment> classical_sat(const ClassicalTheory& fs) {
    std::vector<Clause> clauses;
    for (const ClassicalFormula& f : fs) clauses_of(f, true, clauses);
    std::vector<std::string> vars = classical_vars(fs);
    Assignment a;
    if (!dpll(clauses, vars, a)) return std::nullopt;
    return a;
}

std::optional<Assignment> classical_countermodel(const ClassicalTheory& gamma,
                                                 const ClassicalFormula& chi) {
    ClassicalTheory fs = gamma;
    fs.push_back(ClassicalFormula::lnot(chi));
    return classical_sat(fs);
}

bool classical_entails(const ClassicalTheory& gamma, const ClassicalFormula& chi) {
    return !classical_countermodel(gamma, chi).has_value();
}

// ---------------------------------------------------------------------------
// Translations

ClassicalFormula to_classical(const Formula& f) {
    switch (f.kind()) {
        case Conn::Var:
            return ClassicalFormula::var(signed_name(f.var_name(), SignTag::Plus));
        case Conn::And:
            return ClassicalFormula::land(to_classical(f.lhs()), to_classical(f.rhs()));
        case Conn::Or:
            return ClassicalFormula::lor(to_classical(f.lhs()), to_classical(f.rhs()));
        case Conn::Tri: {
            const Formula& g = f.child();
            if (g.kind() == Conn::Var)
                return ClassicalFormula::var(signed_name(g.var_name(), SignTag::Plus));
            if (g.kind() == Conn::Neg && g.child().kind() == Conn::Var)
                return ClassicalFormula::var(signed_name(g.child().var_name(), SignTag::Minus));
            break;
        }
        case Conn::Neg: {
            const Formula& g = f.child();
            if (g.kind() == Conn::Var)
                return ClassicalFormula::var(signed_name(g.var_name(), SignTag::Minus));
            if (g.kind() == Conn::Tri) {
                const Formula& h = g.child();
                if (h.kind() == Conn::Var)
                    return ClassicalFormula::lnot(
                        ClassicalFormula::var(signed_name(h.var_name(), SignTag::Plus)));
                if (h.kind() == Conn::Neg && h.child().kind() == Conn::Var)
                    return ClassicalFormula::lnot(
                        ClassicalFormula::var(signed_name(h.child().var_name(), SignTag::Minus)));
            }
            break;
        }
        case Conn::Circ:
            break;
    }
    throw FragmentError("signed translation needs a normal-form #-fragment input; offending "
                        "subformula: " +
                        to_string(f));
}

ClassicalFormula classical_from_bd(const Formula& f) {
    switch (f.kind()) {
        case Conn::Var: return ClassicalFormula::var(f.var_name());
        case Conn::Neg: return ClassicalFormula::lnot(classical_from_bd(f.child()));
        case Conn::And:
            return ClassicalFormula::land(classical_from_bd(f.lhs()), classical_from_bd(f.rhs()));
        case Conn::Or:
            return ClassicalFormula::lor(classical_from_bd(f.lhs()), classical_from_bd(f.rhs()));
        default:
            throw FragmentError("plain classical reading requires a formula without @ or #: " +
                                to_string(f));
    }
}

Formula bd_from_classical(const ClassicalFormula& f) {
    switch (f.kind()) {
        case CKind::Var: return Formula::var(f.var_name());
        case CKind::Not: return Formula::neg(bd_from_classical(f.child()));
        case CKind::And:
            return Formula::conj(bd_from_classical(f.lhs()), bd_from_classical(f.rhs()));
        case CKind::Or:
            return Formula::disj(bd_from_classical(f.lhs()), bd_from_classical(f.rhs()));
        default:
            throw std::invalid_argument("constants have no counterpart in the surface syntax");
    }
}

namespace {
Formula embed_vars(const Formula& f, bool use_tri) {
    switch (f.kind()) {
        case Conn::Var:
            return use_tri ? Formula::tri(f) : Formula::circ(f);
        case Conn::Neg: return Formula::neg(embed_vars(f.child(), use_tri));
        case Conn::And:
            return Formula::conj(embed_vars(f.lhs(), use_tri), embed_vars(f.rhs(), use_tri));
        case Conn::Or:
            return Formula::disj(embed_vars(f.lhs(), use_tri), embed_vars(f.rhs(), use_tri));
        default:
            throw FragmentError("variable embedding requires a formula without @ or #: " +
                                to_string(f));
    }
}
}  // namespace

Formula embed_triangle(const Formula& f) { return embed_vars(f, true); }
Formula embed_circ(const Formula& f) { return embed_vars(f, false); }

std::pair<Theory, Formula> embed_cpl_entailment(const Formula& phi, const Formula& chi) {
    std::set<std::string> vars = props(phi);
    auto more = props(chi);
    vars.insert(more.begin(), more.end());
    Formula premise = phi;
    Formula goal = chi;
    for (const std::string& name : vars) {
        Formula p = Formula::var(name);
        premise = Formula::conj(premise, Formula::disj(p, Formula::neg(p)));
        goal = Formula::disj(goal, Formula::conj(p, Formula::neg(p)));
    }
    return {Theory{premise}, goal};
}

Assignment valuation_to_classical(const Valuation& v, const std::vector<std::string>& vars,
                                  bool with_circ) {
    Assignment a;
    for (const std::string& p : vars) {
        TruthValue x = v(p);
        a[signed_name(p, SignTag::Plus)] = (x == TruthValue::T || x == TruthValue::B);
        a[signed_name(p, SignTag::Minus)] = (x == TruthValue::F || x == TruthValue::B);
        if (with_circ)
            a[signed_name(p, SignTag::Circ)] = (x == TruthValue::T || x == TruthValue::F);
    }
    return a;
}

Valuation classical_to_valuation(const Assignment& a, const std::vector<std::string>& vars) {
    auto truth = [&](const std::string& name) {
        auto it = a.find(name);
        return it != a.end() && it->second;
    };
    Valuation v;
    for (const std::string& p : vars) {
        bool plus = truth(signed_name(p, SignTag::Plus));
        bool minus = truth(signed_name(p, SignTag::Minus));
        TruthValue x = plus ? (minus ? TruthValue::B : TruthValue::T)
                            : (minus ? TruthValue::F : TruthValue::N);
        v.set(p, x);
    }
    return v;
}

std::vector<ClassicalFormula> circ_term_counterpart_lits(const Term& term) {
    if (term.lang != TermLang::CircAtomic)
        throw FragmentError("classical counterpart is defined for atomic @-terms");
    std::vector<ClassicalFormula> out;
    for (const Literal& l : term.lits) {
        switch (l.kind) {
            case LitKind::Pos:
                out.push_back(ClassicalFormula::var(signed_name(l.var, SignTag::Plus)));
                break;
            case LitKind::NegP:
                out.push_back(ClassicalFormula::var(signed_name(l.var, SignTag::Minus)));
                break;
            case LitKind::CircA:
                out.push_back(ClassicalFormula::var(signed_name(l.var, SignTag::Circ)));
                break;
            case LitKind::BulletA:
                out.push_back(ClassicalFormula::lnot(
                    ClassicalFormula::var(signed_name(l.var, SignTag::Circ))));
                break;
            default:
                throw FragmentError("unexpected literal kind in atomic @-term");
        }
    }
    return out;
}

ClassicalFormula circ_biconditional(const std::vector<std::string>& base_vars) {
    std::vector<ClassicalFormula> parts;
    for (const std::string& q : base_vars) {
        ClassicalFormula plus = ClassicalFormula::var(signed_name(q, SignTag::Plus));
        ClassicalFormula minus = ClassicalFormula::var(signed_name(q, SignTag::Minus));
        ClassicalFormula circ = ClassicalFormula::var(signed_name(q, SignTag::Circ));
        ClassicalFormula same = ClassicalFormula::lor(
            ClassicalFormula::land(plus, minus),
            ClassicalFormula::land(ClassicalFormula::lnot(plus), ClassicalFormula::lnot(minus)));
        ClassicalFormula differ = ClassicalFormula::lor(
            ClassicalFormula::land(plus, ClassicalFormula::lnot(minus)),
            ClassicalFormula::land(ClassicalFormula::lnot(plus), minus));
        parts.push_back(ClassicalFormula::lor(
            ClassicalFormula::land(ClassicalFormula::lnot(circ), same),
            ClassicalFormula::land(circ, differ)));
    }
    return ClassicalFormula::conj_all(parts);
}

ClassicalFormula substitute(const ClassicalFormula& f, const Assignment& values) {
    switch (f.kind()) {
        case CKind::Var: {
            auto it = values.find(f.var_name());
            if (it == values.end()) return f;
            return it->second ? ClassicalFormula::top() : ClassicalFormula::bottom();
        }
        case CKind::True:
        case CKind::False: return f;
        case CKind::Not: return ClassicalFormula::lnot(substitute(f.child(), values));
        case CKind::And:
            return ClassicalFormula::land(substitute(f.lhs(), values), substitute(f.rhs(), values));
        case CKind::Or:
            return ClassicalFormula::lor(substitute(f.lhs(), values), substitute(f.rhs(), values));
    }
    throw std::logic_error("unreachable connective");
}

ClassicalFormula simplify(const ClassicalFormula& f) {
    switch (f.kind()) {
        case CKind::Var:
        case CKind::True:
        case CKind::False: return f;
        case CKind::Not: {
            ClassicalFormula c = simplify(f.child());
            if (is_top(c)) return ClassicalFormula::bottom();
            if (is_bottom(c)) return ClassicalFormula::top();
            return ClassicalFormula::lnot(c);
        }
        case CKind::And: {
            ClassicalFormula a = simplify(f.lhs());
            ClassicalFormula b = simplify(f.rhs());
            if (is_bottom(a) || is_bottom(b)) return ClassicalFormula::bottom();
            if (is_top(a)) return b;
            if (is_top(b)) return a;
            return ClassicalFormula::land(a, b);
        }
        case CKind::Or: {
            ClassicalFormula a = simplify(f.lhs());
            ClassicalFormula b = simplify(f.rhs());
            if (is_top(a) || is_top(b)) return ClassicalFormula::top();
            if (is_bottom(a)) return b;
            if (is_bottom(b)) return a;
            return ClassicalFormula::lor(a, b);
        }
    }
    throw std::logic_error("unreachable connective");
}

bool is_top(const ClassicalFormula& f) { return f.kind() == CKind::True; }
bool is_bottom(const ClassicalFormula& f) { return f.kind() == CKind::False; }

}  // namespace bdabd
