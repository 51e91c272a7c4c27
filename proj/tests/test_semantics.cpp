#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdabd/classical.hpp"
#include "bdabd/semantics.hpp"
#include "gen.hpp"

using namespace bdabd;

namespace {
const TruthValue kAll[4] = {TruthValue::T, TruthValue::B, TruthValue::N, TruthValue::F};

TruthValue run(const char* text, TruthValue p, TruthValue q = TruthValue::N) {
    Valuation v;
    v.set("p", p);
    v.set("q", q);
    return eval(v, parse_formula(text));
}
}  // namespace

TEST_CASE("connective tables") {
    using TV = TruthValue;
    // and
    const TV and_table[4][4] = {{TV::T, TV::B, TV::N, TV::F},
                                {TV::B, TV::B, TV::F, TV::F},
                                {TV::N, TV::F, TV::N, TV::F},
                                {TV::F, TV::F, TV::F, TV::F}};
    const TV or_table[4][4] = {{TV::T, TV::T, TV::T, TV::T},
                               {TV::T, TV::B, TV::T, TV::B},
                               {TV::T, TV::T, TV::N, TV::N},
                               {TV::T, TV::B, TV::N, TV::F}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(run("p & q", kAll[i], kAll[j]) == and_table[i][j]);
            CHECK(run("p | q", kAll[i], kAll[j]) == or_table[i][j]);
        }
    const TV neg_table[4] = {TV::F, TV::B, TV::N, TV::T};
    const TV circ_table[4] = {TV::T, TV::F, TV::F, TV::T};
    const TV tri_table[4] = {TV::T, TV::T, TV::F, TV::F};
    const TV bullet_table[4] = {TV::F, TV::T, TV::T, TV::F};  // !@: negation of circ
    for (int i = 0; i < 4; ++i) {
        CHECK(run("!p", kAll[i]) == neg_table[i]);
        CHECK(run("@p", kAll[i]) == circ_table[i]);
        CHECK(run("#p", kAll[i]) == tri_table[i]);
        CHECK(run("%p", kAll[i]) == bullet_table[i]);
    }
    CHECK(run("!p", TV::B) == TV::B);
    CHECK(run("p & q", TV::B, TV::N) == TV::F);
    CHECK(run("@p", TV::N) == TV::F);
    CHECK(run("#p", TV::N) == TV::F);
}

TEST_CASE("unmapped variables read N") {
    Valuation v;
    CHECK(eval(v, parse_formula("p")) == TruthValue::N);
    CHECK(eval(v, parse_formula("#p")) == TruthValue::F);
}

TEST_CASE("valuation text form") {
    Valuation v;
    v.set("q", TruthValue::T);
    v.set("p", TruthValue::B);
    CHECK(v.to_string() == "p=B, q=T");
    CHECK(Valuation::parse("p=B, q=T") == v);
    CHECK(Valuation::parse("  q =T ,p= B ") == v);
    CHECK_THROWS(Valuation::parse("p=X"));
    CHECK_THROWS(Valuation::parse("p"));
}

TEST_CASE("satisfiability") {
    CHECK_FALSE(bd_sat(parse_formula("#p & !#p")).has_value());
    CHECK_FALSE(bd_sat(parse_formula("@p & %p")).has_value());
    auto w = bd_sat(Theory{parse_formula("p"), parse_formula("!p")});
    REQUIRE(w.has_value());
    CHECK((*w)("p") == TruthValue::B);
    // least witness in the order T < B < N < F
    auto w2 = bd_sat(parse_formula("p | q"));
    REQUIRE(w2.has_value());
    CHECK(w2->to_string() == "p=T, q=T");
}

TEST_CASE("entailment oracle") {
    CHECK_FALSE(bd_entails_oracle({parse_formula("p"), parse_formula("!p")}, parse_formula("q")));
    CHECK_FALSE(bd_entails_oracle({parse_formula("p | q"), parse_formula("!p")},
                                  parse_formula("q")));
    CHECK(bd_entails_oracle({parse_formula("p | q"), parse_formula("!p & @p")},
                            parse_formula("q")));
    auto counter = bd_countermodel({parse_formula("p & !p")}, parse_formula("q"));
    REQUIRE(counter.has_value());
    CHECK(counter->to_string() == "p=B, q=N");
}

TEST_CASE("consistent entailment") {
    CHECK(bd_cons_entails({parse_formula("p")}, parse_formula("p")));
    CHECK_FALSE(bd_cons_entails({parse_formula("#p & !#p")}, parse_formula("q")));
    CHECK(bd_cons_entails({parse_formula("p | q"), parse_formula("!p"), parse_formula("!q"),
                           parse_formula("@p")},
                          parse_formula("q")));
}

TEST_CASE("equivalences") {
    CHECK(weak_equiv(parse_formula("p"), parse_formula("#p")));
    CHECK_FALSE(strong_equiv(parse_formula("p"), parse_formula("#p")));
    CHECK(strong_equiv(parse_formula("p & !p"), parse_formula("p & %p")));
    CHECK(strong_equiv(parse_formula("p & !p"), parse_formula("!p & %p")));
}

TEST_CASE("consistency operator definition in the # language") {
    std::mt19937 rng(20240910);
    auto vars = gen::var_pool(2);
    for (int i = 0; i < 100; ++i) {
        Formula f = gen::formula(rng, vars, 3, gen::Lang::Full);
        Formula circ = Formula::circ(f);
        Formula tf = Formula::tri(f);
        Formula tnf = Formula::tri(Formula::neg(f));
        Formula defn = Formula::disj(Formula::conj(tf, Formula::neg(tnf)),
                                     Formula::conj(tnf, Formula::neg(tf)));
        CHECK(strong_equiv(circ, defn));
        CHECK(strong_equiv(circ, expand_circ(circ)));
    }
}

TEST_CASE("all-B designates every plain formula, all-N refutes validity") {
    std::mt19937 rng(20240911);
    auto vars = gen::var_pool(4);
    for (int i = 0; i < 200; ++i) {
        Formula f = gen::formula(rng, vars, 4, gen::Lang::BD);
        Valuation all_b;
        for (const auto& name : props(f)) all_b.set(name, TruthValue::B);
        CHECK(eval(all_b, f) == TruthValue::B);
        Valuation all_n;  // default
        CHECK(eval(all_n, f) == TruthValue::N);
        CHECK_FALSE(bd_valid(f));
    }
}

TEST_CASE("contraposition") {
    std::mt19937 rng(20240912);
    auto vars = gen::var_pool(3);
    for (int i = 0; i < 150; ++i) {
        Formula a = gen::formula(rng, vars, 3, gen::Lang::Circ);
        Formula b = gen::formula(rng, vars, 3, gen::Lang::Circ);
        CHECK(bd_entails_oracle({a}, b) ==
              bd_entails_oracle({Formula::neg(b)}, Formula::neg(a)));
    }
}

TEST_CASE("deduction form with the information operator") {
    std::mt19937 rng(20240913);
    auto vars = gen::var_pool(3);
    for (int i = 0; i < 150; ++i) {
        Formula r = gen::formula(rng, vars, 3, gen::Lang::Triangle);
        Formula s = gen::formula(rng, vars, 3, gen::Lang::Triangle);
        Formula t = gen::formula(rng, vars, 3, gen::Lang::Triangle);
        CHECK(bd_entails_oracle({r, s}, t) ==
              bd_entails_oracle({r}, Formula::disj(Formula::neg(Formula::tri(s)), t)));
    }
}

TEST_CASE("two-valued valuations agree with classical evaluation on plain formulas") {
    std::mt19937 rng(20240914);
    auto vars = gen::var_pool(3);
    for (int i = 0; i < 150; ++i) {
        Formula f = gen::formula(rng, vars, 4, gen::Lang::BD);
        std::uniform_int_distribution<int> coin(0, 1);
        Valuation v;
        Assignment a;
        for (const auto& name : vars) {
            bool value = coin(rng) == 1;
            v.set(name, value ? TruthValue::T : TruthValue::F);
            a[name] = value;
        }
        bool four_valued = designated(eval(v, f));
        CHECK(four_valued == eval_classical(a, classical_from_bd(f)));
    }
}

TEST_CASE("brute-force cap is reported") {
    Theory big;
    std::vector<Formula> vars;
    for (char c = 'a'; c <= 'q'; ++c) big.push_back(Formula::var(std::string(1, c)));
    CHECK_THROWS_AS(bd_sat(big), BruteForceCapExceeded);
}
