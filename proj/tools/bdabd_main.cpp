// Command-line front end.  Exit codes: 0 computed (including negative
// answers), 1 input error, 2 resource bound exceeded.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bdabd/abduction.hpp"

namespace {

using namespace bdabd;

// "file or inline": an existing path is read line by line, anything
// else is split on ';'.
Theory load_theory(const std::string& spec) {
    Theory out;
    auto add = [&](const std::string& text) {
        std::string t = text;
        auto a = t.find_first_not_of(" \t\r");
        if (a == std::string::npos) return;
        out.push_back(parse_formula(t));
    };
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        std::string line;
        while (std::getline(in, line)) {
            auto a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos || line[a] == '#') continue;
            add(line);
        }
        return out;
    }
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t semi = spec.find(';', start);
        if (semi == std::string::npos) {
            add(spec.substr(start));
            break;
        }
        add(spec.substr(start, semi - start));
        start = semi + 1;
    }
    return out;
}

SolutionClass parse_class(const std::string& name) {
    auto cls = solution_class_from_string(name);
    if (!cls)
        throw CLI::ValidationError(
            "--class", "expected one of all, proper, bd-minimal, theory-minimal");
    return *cls;
}

int cmd_eval(const std::string& formula_text, const std::string& valuation_text) {
    Formula f = parse_formula(formula_text);
    Valuation v = Valuation::parse(valuation_text);
    std::cout << to_char(eval(v, f)) << '\n';
    return 0;
}

int cmd_sat(const std::string& theory_spec) {
    Theory gamma = load_theory(theory_spec);
    auto witness = bd_sat(gamma);
    if (witness) {
        std::cout << "yes\n";
        if (!witness->to_string().empty()) std::cout << witness->to_string() << '\n';
    } else {
        std::cout << "no\n";
    }
    return 0;
}

// Complete entailment over the full language: @ is rewritten away, the
// result is translated to the two-valued side, and countermodels are
// transported back.
std::optional<Valuation> sat_engine_countermodel(const Theory& gamma, const Formula& chi) {
    std::set<std::string> vars = props(gamma);
    auto more = props(chi);
    vars.insert(more.begin(), more.end());
    ClassicalTheory theory_cl;
    for (const Formula& g : gamma) theory_cl.push_back(to_classical(nnf(expand_circ(g))));
    auto counter = classical_countermodel(theory_cl, to_classical(nnf(expand_circ(chi))));
    if (!counter) return std::nullopt;
    return classical_to_valuation(*counter, {vars.begin(), vars.end()});
}

int cmd_entail(const std::string& theory_spec, const std::string& conclusion,
               const std::string& engine) {
    Theory gamma = load_theory(theory_spec);
    Formula chi = parse_formula(conclusion);
    std::optional<Valuation> counter;
    if (engine == "oracle")
        counter = bd_countermodel(gamma, chi);
    else if (engine == "sat")
        counter = sat_engine_countermodel(gamma, chi);
    else
        throw CLI::ValidationError("--engine", "expected oracle or sat");
    if (counter) {
        std::cout << "no\n" << counter->to_string() << '\n';
    } else {
        std::cout << "yes\n";
    }
    return 0;
}

int cmd_equiv(const std::string& left, const std::string& right, bool strong) {
    Formula a = parse_formula(left);
    Formula b = parse_formula(right);
    bool same = strong ? strong_equiv(a, b) : weak_equiv(a, b);
    std::cout << (same ? "yes" : "no") << '\n';
    return 0;
}

int cmd_translate(const std::string& target, const std::string& formula_text) {
    Formula f = parse_formula(formula_text);
    if (target == "cl") {
        std::cout << bdabd::to_string(to_classical(nnf(f))) << '\n';
    } else if (target == "triangle-embed") {
        std::cout << bdabd::to_string(embed_triangle(f)) << '\n';
    } else if (target == "circ-embed") {
        std::cout << bdabd::to_string(embed_circ(f)) << '\n';
    } else {
        throw CLI::ValidationError("--to", "expected cl, triangle-embed, or circ-embed");
    }
    return 0;
}

int cmd_solve(const std::string& file, const std::string& cls_name, int max_size,
              const std::string& via) {
    AbductionProblem p = parse_problem_file(file);
    SolutionClass cls = parse_class(cls_name);
    std::size_t bound = max_size >= 0 ? static_cast<std::size_t>(max_size) : p.hyps.size();
    SolveRoute route;
    if (via == "native")
        route = SolveRoute::Native;
    else if (via == "classical")
        route = SolveRoute::Classical;
    else
        throw CLI::ValidationError("--via", "expected native or classical");
    for (const Term& t : solve(p, cls, bound, route)) std::cout << t.to_string() << '\n';
    return 0;
}

int cmd_check(const std::string& file, const std::string& candidate,
              const std::string& cls_name) {
    AbductionProblem p = parse_problem_file(file);
    SolutionClass cls = parse_class(cls_name);
    Term tau = term_from_formula(parse_formula(candidate), p.lang);
    std::string reason = describe_failure(p, tau, cls);
    if (reason.empty())
        std::cout << "yes\n";
    else
        std::cout << "no (" << reason << ")\n";
    return 0;
}

int cmd_relevance(const std::string& file, const std::string& hyp_text, bool necessary,
                  const std::string& cls_name, int max_size) {
    AbductionProblem p = parse_problem_file(file);
    SolutionClass cls = parse_class(cls_name);
    auto lit = literal_from_formula(parse_formula(hyp_text));
    if (!lit || !kind_in_lang(lit->kind, p.lang))
        throw ProblemError("--hyp value is not a literal of the problem language: " + hyp_text);
    std::size_t bound = max_size >= 0 ? static_cast<std::size_t>(max_size) : p.hyps.size();
    RelevanceResult r = necessary ? is_necessary(p, *lit, cls, bound)
                                  : is_relevant(p, *lit, cls, bound);
    std::cout << (r.answer ? "yes" : "no");
    if (r.vacuous) std::cout << " (vacuous)";
    std::cout << '\n';
    return 0;
}

int cmd_reduce(const std::string& file) {
    AbductionProblem p = parse_problem_file(file);
    std::cout << print_classical_problem(reduce(p));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abductive reasoning in four-valued logic and its @ / # expansions"};
    app.require_subcommand(1);

    std::string formula_text, valuation_text, theory_spec, conclusion, engine = "sat";
    std::string target, file, cls_name = "proper", via = "native", candidate, hyp_text;
    std::string right_text;
    int max_size = -1;
    bool strong = false, necessary = false;

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula under a valuation");
    eval_cmd->add_option("-f,--formula", formula_text)->required();
    eval_cmd->add_option("-v,--valuation", valuation_text)->default_val("");

    auto* sat_cmd = app.add_subcommand("sat", "Satisfiability of a theory");
    sat_cmd->add_option("-t,--theory", theory_spec)->required();

    auto* entail_cmd = app.add_subcommand("entail", "Theory entailment");
    entail_cmd->add_option("-t,--theory", theory_spec)->required();
    entail_cmd->add_option("-c,--conclusion", conclusion)->required();
    entail_cmd->add_option("--engine", engine)->default_val("sat");

    auto* equiv_cmd = app.add_subcommand("equiv", "Equivalence of two formulas");
    equiv_cmd->add_option("-f,--formula", formula_text)->required();
    equiv_cmd->add_option("-c,--other", right_text)->required();
    equiv_cmd->add_flag("--strong", strong, "value identity instead of mutual entailment");

    auto* translate_cmd = app.add_subcommand("translate", "Translate or embed a formula");
    translate_cmd->add_option("--to", target)->required();
    translate_cmd->add_option("-f,--formula", formula_text)->required();

    auto* solve_cmd = app.add_subcommand("solve", "Enumerate solutions of a problem file");
    solve_cmd->add_option("file", file)->required();
    solve_cmd->add_option("--class", cls_name)->default_val("proper");
    solve_cmd->add_option("--max-size", max_size);
    solve_cmd->add_option("--via", via)->default_val("native");

    auto* check_cmd = app.add_subcommand("check", "Check a candidate term against a class");
    check_cmd->add_option("file", file)->required();
    check_cmd->add_option("--candidate", candidate)->required();
    check_cmd->add_option("--class", cls_name)->default_val("proper");

    auto* relevance_cmd =
        app.add_subcommand("relevance", "Hypothesis relevance or necessity");
    relevance_cmd->add_option("file", file)->required();
    relevance_cmd->add_option("--hyp", hyp_text)->required();
    relevance_cmd->add_flag("--necessary", necessary);
    relevance_cmd->add_option("--class", cls_name)->default_val("proper");
    relevance_cmd->add_option("--max-size", max_size);

    auto* reduce_cmd = app.add_subcommand("reduce", "Print the classical counterpart problem");
    reduce_cmd->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
        if (eval_cmd->parsed()) return cmd_eval(formula_text, valuation_text);
        if (sat_cmd->parsed()) return cmd_sat(theory_spec);
        if (entail_cmd->parsed()) return cmd_entail(theory_spec, conclusion, engine);
        if (equiv_cmd->parsed()) return cmd_equiv(formula_text, right_text, strong);
        if (translate_cmd->parsed()) return cmd_translate(target, formula_text);
        if (solve_cmd->parsed()) return cmd_solve(file, cls_name, max_size, via);
        if (check_cmd->parsed()) return cmd_check(file, candidate, cls_name);
        if (relevance_cmd->parsed())
            return cmd_relevance(file, hyp_text, necessary, cls_name, max_size);
        if (reduce_cmd->parsed()) return cmd_reduce(file);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const bdabd::ResourceBoundError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const bdabd::BruteForceCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
