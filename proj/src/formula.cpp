#include "bdabd/formula.hpp"

#include <cctype>
#include <sstream>

namespace bdabd {

struct Formula::Node {
    Conn kind;
    std::string name;            // Var only
    std::vector<Formula> kids;   // 1 for unary, 2 for binary
};

Formula Formula::var(std::string name) {
    return Formula(std::make_shared<const Node>(Node{Conn::Var, std::move(name), {}}));
}
Formula Formula::neg(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Conn::Neg, "", {std::move(f)}}));
}
Formula Formula::conj(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{Conn::And, "", {std::move(a), std::move(b)}}));
}
Formula Formula::disj(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{Conn::Or, "", {std::move(a), std::move(b)}}));
}
Formula Formula::circ(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Conn::Circ, "", {std::move(f)}}));
}
Formula Formula::tri(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Conn::Tri, "", {std::move(f)}}));
}
Formula Formula::bullet(Formula f) { return neg(circ(std::move(f))); }

Formula Formula::conj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) throw std::invalid_argument("conj_all: empty formula list");
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
    return acc;
}
Formula Formula::disj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) throw std::invalid_argument("disj_all: empty formula list");
    Formula acc = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
    return acc;
}

Conn Formula::kind() const { return node_->kind; }

const std::string& Formula::var_name() const {
    if (node_->kind != Conn::Var) throw std::logic_error("var_name on non-variable");
    return node_->name;
}
const Formula& Formula::child() const {
    if (node_->kids.size() != 1) throw std::logic_error("child on binary/leaf node");
    return node_->kids[0];
}
const Formula& Formula::lhs() const {
    if (node_->kids.size() != 2) throw std::logic_error("lhs on non-binary node");
    return node_->kids[0];
}
const Formula& Formula::rhs() const {
    if (node_->kids.size() != 2) throw std::logic_error("rhs on non-binary node");
    return node_->kids[1];
}

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) return true;
    if (node_->kind != other.node_->kind) return false;
    if (node_->kind == Conn::Var) return node_->name == other.node_->name;
    for (std::size_t i = 0; i < node_->kids.size(); ++i)
        if (!(node_->kids[i] == other.node_->kids[i])) return false;
    return true;
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty input", pos_);
        Formula f = parse_or();
        skip_ws();
        if (!at_end()) throw ParseError("unexpected trailing input", pos_);
        return f;
    }

private:
    Formula parse_or() {
        Formula f = parse_and();
        skip_ws();
        while (!at_end() && peek() == '|') {
            ++pos_;
            Formula g = parse_and();
            f = Formula::disj(f, g);
            skip_ws();
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        skip_ws();
        while (!at_end() && peek() == '&') {
            ++pos_;
            Formula g = parse_unary();
            f = Formula::conj(f, g);
            skip_ws();
        }
        return f;
    }

    Formula parse_unary() {
        skip_ws();
        if (at_end()) throw ParseError("expected formula", pos_);
        char c = peek();
        switch (c) {
            case '!': ++pos_; return Formula::neg(parse_unary());
            case '@': ++pos_; return Formula::circ(parse_unary());
            case '#': ++pos_; return Formula::tri(parse_unary());
            case '%': ++pos_; return Formula::bullet(parse_unary());
            case '(': {
                ++pos_;
                Formula f = parse_or();
                skip_ws();
                if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
                ++pos_;
                return f;
            }
            default: break;
        }
        if (c >= 'a' && c <= 'z') return parse_var();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Formula parse_var() {
        std::size_t start = pos_;
        ++pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        // Double underscores are reserved for the classical signed-variable
        // renderings (p__pos etc.) and must not collide with user input.
        if (name.find("__") != std::string::npos)
            throw ParseError("variable names may not contain \"__\": " + name, start);
        return Formula::var(std::move(name));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

// precedence levels: | = 1, & = 2, unary = 3, var = 4
int precedence(const Formula& f) {
    switch (f.kind()) {
        case Conn::Or: return 1;
        case Conn::And: return 2;
        case Conn::Var: return 4;
        default: return 3;
    }
}

void print_rec(std::ostringstream& out, const Formula& f, int min_prec) {
    int prec = precedence(f);
    bool parens = prec < min_prec;
    if (parens) out << '(';
    switch (f.kind()) {
        case Conn::Var:
            out << f.var_name();
            break;
        case Conn::Neg:
            if (f.child().kind() == Conn::Circ) {
                out << '%';
                print_rec(out, f.child().child(), 3);
            } else {
                out << '!';
                print_rec(out, f.child(), 3);
            }
            break;
        case Conn::Circ:
            out << '@';
            print_rec(out, f.child(), 3);
            break;
        case Conn::Tri:
            out << '#';
            print_rec(out, f.child(), 3);
            break;
        case Conn::And:
            print_rec(out, f.lhs(), 2);
            out << " & ";
            print_rec(out, f.rhs(), 3);  // left-associative: right child needs parens if And/Or
            break;
        case Conn::Or:
            print_rec(out, f.lhs(), 1);
            out << " | ";
            print_rec(out, f.rhs(), 2);
            break;
    }
    if (parens) out << ')';
}

}  // namespace

std::string to_string(const Formula& f) {
    std::ostringstream out;
    print_rec(out, f, 0);
    return out.str();
}

std::string to_string(const Theory& theory) {
    std::ostringstream out;
    std::set<std::string> seen;
    for (const Formula& f : theory) {
        std::string s = to_string(f);
        if (seen.insert(s).second) out << s << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Simple structural queries

namespace {
void collect_props(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
        case Conn::Var: out.insert(f.var_name()); break;
        case Conn::Neg:
        case Conn::Circ:
        case Conn::Tri: collect_props(f.child(), out); break;
        case Conn::And:
        case Conn::Or:
            collect_props(f.lhs(), out);
            collect_props(f.rhs(), out);
            break;
    }
}

void scan_ops(const Formula& f, bool& has_circ, bool& has_tri) {
    switch (f.kind()) {
        case Conn::Var: break;
        case Conn::Circ:
            has_circ = true;
            scan_ops(f.child(), has_circ, has_tri);
            break;
        case Conn::Tri:
            has_tri = true;
            scan_ops(f.child(), has_circ, has_tri);
            break;
        case Conn::Neg: scan_ops(f.child(), has_circ, has_tri); break;
        case Conn::And:
        case Conn::Or:
            scan_ops(f.lhs(), has_circ, has_tri);
            scan_ops(f.rhs(), has_circ, has_tri);
            break;
    }
}
}  // namespace

std::set<std::string> props(const Formula& f) {
    std::set<std::string> out;
    collect_props(f, out);
    return out;
}

std::set<std::string> props(const Theory& theory) {
    std::set<std::string> out;
    for (const Formula& f : theory) collect_props(f, out);
    return out;
}

FragmentTag fragment(const Formula& f) {
    bool has_circ = false, has_tri = false;
    scan_ops(f, has_circ, has_tri);
    if (has_circ && has_tri) return FragmentTag::Full;
    if (has_circ) return FragmentTag::Circ;
    if (has_tri) return FragmentTag::Triangle;
    return FragmentTag::BD;
}

bool in_bd_fragment(const Formula& f) { return fragment(f) == FragmentTag::BD; }

// ---------------------------------------------------------------------------
// Negation normal form.
//
// nnf_pos / nnf_neg compute NNF(f) and NNF(!f).  tri_pos / tri_neg push a
// # inward over f and !f, using ## = #, #!# = !#, and distribution of #
// over & and |.  Negation stops at @; @-subformulas stay opaque.

namespace {

Formula nnf_pos(const Formula& f);
Formula nnf_neg(const Formula& f);
Formula tri_pos(const Formula& f);
Formula tri_neg(const Formula& f);

Formula nnf_pos(const Formula& f) {
    switch (f.kind()) {
        case Conn::Var:
        case Conn::Circ: return f;
        case Conn::Neg: return nnf_neg(f.child());
        case Conn::And: return Formula::conj(nnf_pos(f.lhs()), nnf_pos(f.rhs()));
        case Conn::Or: return Formula::disj(nnf_pos(f.lhs()), nnf_pos(f.rhs()));
        case Conn::Tri: return tri_pos(f.child());
    }
    throw std::logic_error("unreachable");
}

Formula nnf_neg(const Formula& f) {
    switch (f.kind()) {
        case Conn::Var:
        case Conn::Circ: return Formula::neg(f);
        case Conn::Neg: return nnf_pos(f.child());
        case Conn::And: return Formula::disj(nnf_neg(f.lhs()), nnf_neg(f.rhs()));
        case Conn::Or: return Formula::conj(nnf_neg(f.lhs()), nnf_neg(f.rhs()));
        case Conn::Tri: return tri_neg(f.child());
    }
    throw std::logic_error("unreachable");
}

// NNF of #f
Formula tri_pos(const Formula& f) {
    switch (f.kind()) {
        case Conn::Var: return Formula::tri(f);
        case Conn::Circ: return f;  // @x is already two-valued, so ##-like collapse applies
        case Conn::And: return Formula::conj(tri_pos(f.lhs()), tri_pos(f.rhs()));
        case Conn::Or: return Formula::disj(tri_pos(f.lhs()), tri_pos(f.rhs()));
        case Conn::Tri: return tri_pos(f.child());
        case Conn::Neg: {
            const Formula& g = f.child();
            switch (g.kind()) {
                case Conn::Var: return Formula::tri(Formula::neg(g));  // literal #!p
                case Conn::Neg: return tri_pos(g.child());
                case Conn::And:
                    return Formula::disj(tri_pos(Formula::neg(g.lhs())),
                                         tri_pos(Formula::neg(g.rhs())));
                case Conn::Or:
                    return Formula::conj(tri_pos(Formula::neg(g.lhs())),
                                         tri_pos(Formula::neg(g.rhs())));
                case Conn::Tri: return tri_neg(g.child());   // #!#x == !#x
                case Conn::Circ: return Formula::neg(g);     // #!@x == !@x
            }
            throw std::logic_error("unreachable");
        }
    }
    throw std::logic_error("unreachable");
}

// NNF of !#f
Formula tri_neg(const Formula& f) {
    // literal base cases
    if (f.kind() == Conn::Var) return Formula::neg(Formula::tri(f));
    if (f.kind() == Conn::Neg && f.child().kind() == Conn::Var)
        return Formula::neg(Formula::tri(f));
    // otherwise push # first, then negate the two-valued result
    return nnf_neg(tri_pos(f));
}

}  // namespace

Formula nnf(const Formula& f) { return nnf_pos(f); }

namespace {
// assumes NNF input
Formula drop_unnegated_tri(const Formula& f) {
    switch (f.kind()) {
        case Conn::Tri: return f.child();  // # over a plain/negated variable
        case Conn::And: return Formula::conj(drop_unnegated_tri(f.lhs()), drop_unnegated_tri(f.rhs()));
        case Conn::Or: return Formula::disj(drop_unnegated_tri(f.lhs()), drop_unnegated_tri(f.rhs()));
        default: return f;
    }
}
}  // namespace

Formula flatten(const Formula& f) { return drop_unnegated_tri(nnf(f)); }

Formula expand_circ(const Formula& f) {
    switch (f.kind()) {
        case Conn::Var: return f;
        case Conn::Neg: return Formula::neg(expand_circ(f.child()));
        case Conn::Tri: return Formula::tri(expand_circ(f.child()));
        case Conn::And: return Formula::conj(expand_circ(f.lhs()), expand_circ(f.rhs()));
        case Conn::Or: return Formula::disj(expand_circ(f.lhs()), expand_circ(f.rhs()));
        case Conn::Circ: {
            Formula x = expand_circ(f.child());
            Formula tx = Formula::tri(x);
            Formula tnx = Formula::tri(Formula::neg(x));
            return Formula::disj(Formula::conj(tx, Formula::neg(tnx)),
                                 Formula::conj(tnx, Formula::neg(tx)));
        }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// DNF / CNF by distribution over the NNF literal skeleton.  @-literals
// (possibly over compound formulas) are indivisible.

namespace {

bool is_nnf_literal(const Formula& f) {
    switch (f.kind()) {
        case Conn::Var:
        case Conn::Circ: return true;
        case Conn::Tri: {
            const Formula& g = f.child();
            return g.kind() == Conn::Var ||
                   (g.kind() == Conn::Neg && g.child().kind() == Conn::Var);
        }
        case Conn::Neg: {
            const Formula& g = f.child();
            if (g.kind() == Conn::Var || g.kind() == Conn::Circ) return true;
            return g.kind() == Conn::Tri && is_nnf_literal(g);
        }
        default: return false;
    }
}

using LitSet = std::vector<Formula>;  // kept sorted by printed form, unique

void insert_lit(LitSet& set, const Formula& lit) {
    std::string key = to_string(lit);
    for (const Formula& f : set)
        if (to_string(f) == key) return;
    auto it = set.begin();
    while (it != set.end() && to_string(*it) < key) ++it;
    set.insert(it, lit);
}

LitSet merge_lits(const LitSet& a, const LitSet& b) {
    LitSet out = a;
    for (const Formula& f : b) insert_lit(out, f);
    return out;
}

// dual = false: list of terms (DNF); dual = true: list of clauses (CNF)
std::vector<LitSet> distribute(const Formula& f, bool dual) {
    if (is_nnf_literal(f)) return {LitSet{f}};
    Conn merge_conn = dual ? Conn::Or : Conn::And;   // merged within a group
    if (f.kind() == merge_conn) {
        auto left = distribute(f.lhs(), dual);
        auto right = distribute(f.rhs(), dual);
        std::vector<LitSet> out;
        for (const auto& a : left)
            for (const auto& b : right) out.push_back(merge_lits(a, b));
        return out;
    }
    // the other binary connective: concatenate groups
    auto out = distribute(f.lhs(), dual);
    auto right = distribute(f.rhs(), dual);
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

Formula rebuild(const std::vector<LitSet>& groups, bool dual) {
    std::vector<Formula> parts;
    for (const LitSet& g : groups)
        parts.push_back(dual ? Formula::disj_all(g) : Formula::conj_all(g));
    return dual ? Formula::conj_all(parts) : Formula::disj_all(parts);
}

}  // namespace

Formula to_dnf(const Formula& f) { return rebuild(distribute(nnf(f), false), false); }
Formula to_cnf(const Formula& f) { return rebuild(distribute(nnf(f), true), true); }

Constants constants() {
    Formula p = Formula::var("p");
    return Constants{
        Formula::circ(Formula::circ(p)),
        Formula::bullet(Formula::circ(p)),
        Formula::disj(Formula::tri(p), Formula::neg(Formula::tri(p))),
        Formula::conj(Formula::tri(p), Formula::neg(Formula::tri(p))),
    };
}

}  // namespace bdabd
