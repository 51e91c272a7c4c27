// Truth values, valuations, truth-table evaluation, and brute-force
// oracles for satisfiability, entailment, and equivalence.  The oracles
// enumerate all 4^n valuations over the relevant variables and are the
// test instrument against which the polynomial procedures are checked.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "bdabd/formula.hpp"

namespace bdabd {

// Enumeration order T < B < N < F is load-bearing: witnesses are
// reported lexicographically least under this order.
enum class TruthValue : std::uint8_t { T = 0, B = 1, N = 2, F = 3 };

inline bool designated(TruthValue v) { return v == TruthValue::T || v == TruthValue::B; }

char to_char(TruthValue v);
TruthValue value_from_char(char c);

/// Finite map from variable names to truth values; unmapped variables
/// read as N ("no information").
class Valuation {
public:
    Valuation() = default;

    TruthValue operator()(const std::string& name) const;
    void set(const std::string& name, TruthValue v);

    /// Text form "p=B, q=T" (sorted by name, comma-separated).
    std::string to_string() const;
    static Valuation parse(std::string_view text);

    const std::map<std::string, TruthValue>& entries() const { return map_; }
    bool operator==(const Valuation&) const = default;

private:
    std::map<std::string, TruthValue> map_;
};

TruthValue eval(const Valuation& v, const Formula& f);

class BruteForceCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultVarCap = 16;

/// Least valuation designating every member, or nullopt.
std::optional<Valuation> bd_sat(const Theory& theory, int var_cap = kDefaultVarCap);
std::optional<Valuation> bd_sat(const Formula& f, int var_cap = kDefaultVarCap);

bool bd_valid(const Formula& f, int var_cap = kDefaultVarCap);

bool bd_entails_oracle(const Theory& gamma, const Formula& chi, int var_cap = kDefaultVarCap);

/// Least valuation designating gamma but not chi; nullopt when the
/// entailment holds.
std::optional<Valuation> bd_countermodel(const Theory& gamma, const Formula& chi,
                                         int var_cap = kDefaultVarCap);

/// Consistent entailment: gamma is satisfiable and entails chi.
bool bd_cons_entails(const Theory& gamma, const Formula& chi, int var_cap = kDefaultVarCap);

bool weak_equiv(const Formula& a, const Formula& b, int var_cap = kDefaultVarCap);
bool strong_equiv(const Formula& a, const Formula& b, int var_cap = kDefaultVarCap);

}  // namespace bdabd
