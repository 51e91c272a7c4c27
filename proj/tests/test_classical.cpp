#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdabd/classical.hpp"
#include "bdabd/terms.hpp"
#include "gen.hpp"

using namespace bdabd;

namespace {

ClassicalFormula cl(const char* text) { return to_classical(nnf(parse_formula(text))); }

// exhaustive two-valued check, used to cross-validate the search
bool truth_table_sat(const ClassicalTheory& fs) {
    std::vector<std::string> vars = classical_vars(fs);
    REQUIRE(vars.size() <= 12);
    for (std::size_t mask = 0; mask < (std::size_t{1} << vars.size()); ++mask) {
        Assignment a;
        for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = (mask >> i) & 1;
        bool all = true;
        for (const auto& f : fs)
            if (!eval_classical(a, f)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("signed names") {
    CHECK(signed_name("p", SignTag::Plus) == "p__pos");
    CHECK(signed_name("p", SignTag::Minus) == "p__neg");
    CHECK(signed_name("p", SignTag::Circ) == "p__circ");
    auto split = split_signed_name("ab__circ");
    REQUIRE(split.has_value());
    CHECK(split->first == "ab");
    CHECK(split->second == SignTag::Circ);
    CHECK_FALSE(split_signed_name("plain").has_value());
}

TEST_CASE("signed translation of literals") {
    CHECK(to_string(cl("!#p")) == "~p__pos");
    CHECK(to_string(cl("#!p")) == "p__neg");
    CHECK(to_string(cl("p & !q")) == "p__pos & q__neg");
    CHECK(to_string(cl("#p")) == "p__pos");
    CHECK(to_string(cl("!#!p")) == "~p__neg");
    CHECK_THROWS_AS(to_classical(parse_formula("@p")), FragmentError);
    CHECK_THROWS_AS(to_classical(parse_formula("!(p & q)")), FragmentError);
}

TEST_CASE("classical printing") {
    CHECK(to_string(ClassicalFormula::lor(ClassicalFormula::top(),
                                          ClassicalFormula::lnot(ClassicalFormula::var("x")))) ==
          "T | ~x");
    CHECK(to_string(ClassicalFormula::land(
              ClassicalFormula::lor(ClassicalFormula::var("a"), ClassicalFormula::var("b")),
              ClassicalFormula::bottom())) == "(a | b) & F");
}

TEST_CASE("variable embeddings") {
    CHECK(embed_triangle(parse_formula("p | !p")) == parse_formula("#p | !#p"));
    CHECK(embed_circ(parse_formula("p | !p")) == parse_formula("@p | !@p"));
    CHECK(bd_valid(parse_formula("#p | !#p")));
    CHECK(bd_valid(parse_formula("@p | !@p")));
    CHECK_FALSE(bd_sat(parse_formula("#p & !#p")).has_value());
    CHECK_THROWS_AS(embed_triangle(parse_formula("#p")), FragmentError);
}

TEST_CASE("classical entailment wrapper") {
    auto [theory, goal] = embed_cpl_entailment(parse_formula("p & !p"), parse_formula("q"));
    CHECK(bd_entails_oracle(theory, goal));  // explosion restored
    auto [t2, g2] = embed_cpl_entailment(parse_formula("p"), parse_formula("p | q"));
    CHECK(bd_entails_oracle(t2, g2));
    auto [t3, g3] = embed_cpl_entailment(parse_formula("p | q"), parse_formula("p"));
    CHECK_FALSE(bd_entails_oracle(t3, g3));
}

TEST_CASE("satisfiability search basics") {
    ClassicalFormula p = ClassicalFormula::var("p");
    ClassicalFormula q = ClassicalFormula::var("q");
    CHECK_FALSE(classical_sat({p, ClassicalFormula::lnot(p)}).has_value());
    auto model = classical_sat({ClassicalFormula::lor(p, q), ClassicalFormula::lnot(p)});
    REQUIRE(model.has_value());
    CHECK(model->at("q"));
    CHECK_FALSE(model->at("p"));
    CHECK_FALSE(classical_sat({cl("#p & !#p")}).has_value());
    CHECK(classical_entails({}, ClassicalFormula::lor(p, ClassicalFormula::lnot(p))));
    CHECK_FALSE(classical_entails({ClassicalFormula::lor(p, q),
                                   ClassicalFormula::var("p__neg")},
                                  ClassicalFormula::var("q__pos")));
    // least model: false before true, variables in name order
    auto least = classical_sat({ClassicalFormula::lor(p, q)});
    REQUIRE(least.has_value());
    CHECK_FALSE(least->at("p"));
    CHECK(least->at("q"));
}

TEST_CASE("search agrees with truth tables") {
    std::mt19937 rng(20240920);
    auto vars = gen::var_pool(4);
    for (int i = 0; i < 200; ++i) {
        ClassicalTheory fs;
        for (int j = 0; j < 2; ++j)
            fs.push_back(classical_from_bd(gen::formula(rng, vars, 4, gen::Lang::BD)));
        // negate one member half the time so unsatisfiable sets occur
        if (i % 2) fs[0] = ClassicalFormula::lnot(fs[0]);
        CHECK(classical_sat(fs).has_value() == truth_table_sat(fs));
    }
}

TEST_CASE("valuation transport round trips") {
    Valuation v;
    v.set("p", TruthValue::B);
    v.set("q", TruthValue::N);
    v.set("r", TruthValue::T);
    Assignment a = valuation_to_classical(v, {"p", "q", "r"}, true);
    CHECK(a["p__pos"]);
    CHECK(a["p__neg"]);
    CHECK_FALSE(a["p__circ"]);
    CHECK_FALSE(a["q__pos"]);
    CHECK_FALSE(a["q__neg"]);
    CHECK_FALSE(a["q__circ"]);
    CHECK(a["r__pos"]);
    CHECK_FALSE(a["r__neg"]);
    CHECK(a["r__circ"]);
    CHECK(classical_to_valuation(a, {"p", "q", "r"}) == v);
}

TEST_CASE("faithfulness of the signed translation") {
    std::mt19937 rng(20240921);
    auto vars = gen::var_pool(4);
    for (int i = 0; i < 300; ++i) {
        Formula a = nnf(gen::formula(rng, vars, 4, gen::Lang::Triangle));
        Formula b = nnf(gen::formula(rng, vars, 4, gen::Lang::Triangle));
        bool bd = bd_entails_oracle({a}, b);
        bool classical = classical_entails({to_classical(a)}, to_classical(b));
        CHECK(bd == classical);
        if (!bd) {
            // transport each countermodel to the other side
            auto v = bd_countermodel({a}, b);
            REQUIRE(v.has_value());
            std::set<std::string> names = props(a);
            auto more = props(b);
            names.insert(more.begin(), more.end());
            std::vector<std::string> var_list(names.begin(), names.end());
            Assignment transported = valuation_to_classical(*v, var_list, false);
            CHECK(eval_classical(transported, to_classical(a)));
            CHECK_FALSE(eval_classical(transported, to_classical(b)));

            auto counter = classical_countermodel({to_classical(a)}, to_classical(b));
            REQUIRE(counter.has_value());
            Valuation back = classical_to_valuation(*counter, var_list);
            CHECK(designated(eval(back, a)));
            CHECK_FALSE(designated(eval(back, b)));
        }
    }
}

TEST_CASE("faithfulness of the @-term encoding") {
    std::mt19937 rng(20240922);
    auto vars = gen::var_pool(3);
    for (int i = 0; i < 300; ++i) {
        Term phi = gen::term(rng, vars, TermLang::CircAtomic, 4);
        Formula chi = gen::formula(rng, vars, 3, gen::Lang::BD);
        Formula psi = gen::formula(rng, vars, 3, gen::Lang::BD);
        bool bd = bd_entails_oracle({phi.to_formula(), chi}, psi);

        ClassicalTheory lhs = circ_term_counterpart_lits(phi);
        std::set<std::string> names = {vars.begin(), vars.end()};
        lhs.push_back(circ_biconditional({names.begin(), names.end()}));
        lhs.push_back(to_classical(nnf(chi)));
        bool classical = classical_entails(lhs, to_classical(nnf(psi)));
        CHECK(bd == classical);
    }
}

TEST_CASE("embeddings preserve classical validity") {
    std::mt19937 rng(20240923);
    auto vars = gen::var_pool(3);
    for (int i = 0; i < 200; ++i) {
        Formula f = gen::formula(rng, vars, 4, gen::Lang::BD);
        bool cpl_valid = classical_entails({}, classical_from_bd(f));
        CHECK(cpl_valid == bd_valid(embed_triangle(f)));
        CHECK(cpl_valid == bd_valid(embed_circ(f)));
    }
}

TEST_CASE("counterpart of atomic @-terms") {
    Term t = term_from_formula(parse_formula("p & !q & @p"), TermLang::CircAtomic);
    auto lits = circ_term_counterpart_lits(t);
    REQUIRE(lits.size() == 3);
    CHECK(to_string(ClassicalFormula::conj_all(lits)) == "p__pos & p__circ & q__neg");
    Term bullet = term_from_formula(parse_formula("%p"), TermLang::CircAtomic);
    CHECK(to_string(circ_term_counterpart_lits(bullet)[0]) == "~p__circ");
}

TEST_CASE("substitution and constant propagation") {
    ClassicalFormula f = cl("p | q");
    Assignment values{{"p__pos", false}};
    CHECK(to_string(simplify(substitute(f, values))) == "q__pos");
    values["q__pos"] = false;
    CHECK(is_bottom(simplify(substitute(f, values))));
    values["q__pos"] = true;
    CHECK(is_top(simplify(substitute(f, values))));
}
