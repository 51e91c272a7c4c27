#include "bdabd/semantics.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <vector>

namespace bdabd {

namespace {

using TV = TruthValue;

// Tables indexed by the enum order T=0, B=1, N=2, F=3.
constexpr TV kAnd[4][4] = {
    {TV::T, TV::B, TV::N, TV::F},
    {TV::B, TV::B, TV::F, TV::F},
    {TV::N, TV::F, TV::N, TV::F},
    {TV::F, TV::F, TV::F, TV::F},
};

constexpr TV kOr[4][4] = {
    {TV::T, TV::T, TV::T, TV::T},
    {TV::T, TV::B, TV::T, TV::B},
    {TV::T, TV::T, TV::N, TV::N},
    {TV::T, TV::B, TV::N, TV::F},
};

constexpr TV kNeg[4] = {TV::F, TV::B, TV::N, TV::T};
constexpr TV kCirc[4] = {TV::T, TV::F, TV::F, TV::T};
constexpr TV kTri[4] = {TV::T, TV::T, TV::F, TV::F};

}  // namespace

char to_char(TruthValue v) {
    switch (v) {
        case TV::T: return 'T';
        case TV::B: return 'B';
        case TV::N: return 'N';
        case TV::F: return 'F';
    }
    return '?';
}

TruthValue value_from_char(char c) {
    switch (c) {
        case 'T': return TV::T;
        case 'B': return TV::B;
        case 'N': return TV::N;
        case 'F': return TV::F;
        default: throw std::invalid_argument(std::string("not a truth value: ") + c);
    }
}

TruthValue Valuation::operator()(const std::string& name) const {
    auto it = map_.find(name);
    return it == map_.end() ? TV::N : it->second;
}

void Valuation::set(const std::string& name, TruthValue v) { map_[name] = v; }

std::string Valuation::to_string() const {
    std::string out;
    for (const auto& [name, value] : map_) {
        if (!out.empty()) out += ", ";
        out += name;
        out += '=';
        out += to_char(value);
    }
    return out;
}

Valuation Valuation::parse(std::string_view text) {
    Valuation v;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        std::size_t start = i;
        while (i < text.size() && text[i] != '=') ++i;
        if (i == text.size())
            throw std::invalid_argument("valuation entry missing '='");
        std::string name(text.substr(start, i - start));
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        if (name.empty()) throw std::invalid_argument("valuation entry missing variable name");
        ++i;  // '='
        skip_ws();
        if (i == text.size()) throw std::invalid_argument("valuation entry missing value");
        v.set(name, value_from_char(text[i]));
        ++i;
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ',')
                throw std::invalid_argument("expected ',' between valuation entries");
            ++i;
            skip_ws();
        }
    }
    return v;
}

TruthValue eval(const Valuation& v, const Formula& f) {
    switch (f.kind()) {
        case Conn::Var:
            return v(f.var_name());
        case Conn::Neg:
            return kNeg[static_cast<int>(eval(v, f.child()))];
        case Conn::Circ:
            return kCirc[static_cast<int>(eval(v, f.child()))];
        case Conn::Tri:
            return kTri[static_cast<int>(eval(v, f.child()))];
        case Conn::And: {
            TV a = eval(v, f.lhs());
            TV b = eval(v, f.rhs());
            return kAnd[static_cast<int>(a)][static_cast<int>(b)];
        }
        case Conn::Or: {
            TV a = eval(v, f.lhs());
            TV b = eval(v, f.rhs());
            return kOr[static_cast<int>(a)][static_cast<int>(b)];
        }
    }
    throw std::logic_error("unreachable connective");
}

namespace {

std::vector<std::string> collect_vars(const Theory& gamma, const Formula* extra, int var_cap) {
    std::set<std::string> names = props(gamma);
    if (extra) {
        auto more = props(*extra);
        names.insert(more.begin(), more.end());
    }
    if (static_cast<int>(names.size()) > var_cap) {
        std::ostringstream msg;
        msg << "brute-force enumeration over " << names.size()
            << " variables exceeds the cap of " << var_cap;
        throw BruteForceCapExceeded(msg.str());
    }
    return {names.begin(), names.end()};
}

// Calls fn for each valuation over vars, counting in the value order
// T < B < N < F with the last variable varying fastest.  Stops when fn
// returns true and reports whether that happened.
bool for_each_valuation(const std::vector<std::string>& vars,
                        const std::function<bool(const Valuation&)>& fn) {
    std::vector<int> digits(vars.size(), 0);
    for (;;) {
        Valuation v;
        for (std::size_t i = 0; i < vars.size(); ++i)
            v.set(vars[i], static_cast<TruthValue>(digits[i]));
        if (fn(v)) return true;
        std::size_t i = vars.size();
        while (i > 0 && digits[i - 1] == 3) digits[--i] = 0;
        if (i == 0) return false;
        ++digits[i - 1];
    }
}

bool designates_all(const Valuation& v, const Theory& theory) {
    return std::all_of(theory.begin(), theory.end(),
                       [&](const Formula& f) { return designated(eval(v, f)); });
}

}  // namespace

std::optional<Valuation> bd_sat(const Theory& theory, int var_cap) {
    auto vars = collect_vars(theory, nullptr, var_cap);
    std::optional<Valuation> found;
    for_each_valuation(vars, [&](const Valuation& v) {
        if (!designates_all(v, theory)) return false;
        found = v;
        return true;
    });
    return found;
}

std::optional<Valuation> bd_sat(const Formula& f, int var_cap) {
    return bd_sat(Theory{f}, var_cap);
}

bool bd_valid(const Formula& f, int var_cap) {
    return bd_entails_oracle({}, f, var_cap);
}

std::optional<Valuation> bd_countermodel(const Theory& gamma, const Formula& chi, int var_cap) {
    auto vars = collect_vars(gamma, &chi, var_cap);
    std::optional<Valuation> found;
    for_each_valuation(vars, [&](const Valuation& v) {
        if (!designates_all(v, gamma) || designated(eval(v, chi))) return false;
        found = v;
        return true;
    });
    return found;
}

bool bd_entails_oracle(const Theory& gamma, const Formula& chi, int var_cap) {
    return !bd_countermodel(gamma, chi, var_cap).has_value();
}

bool bd_cons_entails(const Theory& gamma, const Formula& chi, int var_cap) {
    return bd_sat(gamma, var_cap).has_value() && bd_entails_oracle(gamma, chi, var_cap);
}

bool weak_equiv(const Formula& a, const Formula& b, int var_cap) {
    return bd_entails_oracle({a}, b, var_cap) && bd_entails_oracle({b}, a, var_cap);
}

bool strong_equiv(const Formula& a, const Formula& b, int var_cap) {
    auto vars = collect_vars({a}, &b, var_cap);
    bool differ = for_each_valuation(vars, [&](const Valuation& v) {
        return eval(v, a) != eval(v, b);
    });
    return !differ;
}

}  // namespace bdabd
