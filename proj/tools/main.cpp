#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "tdesc/hopf.hpp"
#include "tdesc/json_io.hpp"
#include "tdesc/parallel.hpp"
#include "tdesc/render.hpp"
#include "tdesc/symgroup.hpp"
#include "tdesc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitDomainError = 3;

bool is_permutation_literal(const std::string& text) { return text.rfind("p:", 0) == 0; }

int run_bijection(const std::string& to_tree, const std::string& to_comp, bool json) {
    using namespace tdesc;
    if (to_tree.empty() == to_comp.empty())
        throw ParseError("bijection: exactly one of --to-tree / --to-comp is required");
    if (!to_tree.empty()) {
        IncreasingTree t = to_increasing_tree(SetComposition::parse(to_tree));
        if (json) {
            std::cout << Json{{"tree", t.str()}, {"render", render_ascii(t)}}.dump(2) << "\n";
        } else {
            std::cout << t.str() << "\n" << render_ascii(t) << "\n";
        }
    } else {
        SetComposition p = to_set_composition(IncreasingTree::parse(to_comp));
        if (json)
            std::cout << Json{{"composition", p.str()}}.dump(2) << "\n";
        else
            std::cout << p.str() << "\n";
    }
    return kExitOk;
}

int run_product(const std::string& op, const std::string& lhs, const std::string& rhs) {
    using namespace tdesc;
    if (op == "mr") {
        Permutation a = Permutation::parse(lhs), b = Permutation::parse(rhs);
        std::cout << to_json(mr_product(a, b)).dump(2) << "\n";
        return kExitOk;
    }
    SetComposition p = SetComposition::parse(lhs), q = SetComposition::parse(rhs);
    LinearCombination<SetComposition> out;
    if (op == "internal")
        out = LinearCombination<SetComposition>::basis(internal_product(p, q));
    else if (op == "conv")
        out = LinearCombination<SetComposition>::basis(concat_disjoint(p, q));
    else if (op == "restricted")
        out = LinearCombination<SetComposition>::basis(restricted_product(p, q));
    else if (op == "symmetrized")
        out = symmetrized_product(p, q);
    else
        throw ParseError("product: unknown --op '" + op + "'");
    std::cout << to_json(out).dump(2) << "\n";
    return kExitOk;
}

int run_coproduct(const std::string& op, const std::string& operand) {
    using namespace tdesc;
    if (op == "mr") {
        std::cout << to_json(mr_coproduct(Permutation::parse(operand))).dump(2) << "\n";
        return kExitOk;
    }
    if (op == "delta-hat" && is_permutation_literal(operand)) {
        std::cout << to_json(cosym_coproduct_perm(Permutation::parse(operand))).dump(2) << "\n";
        return kExitOk;
    }
    SetComposition p = SetComposition::parse(operand);
    TensorCombination<SetComposition> out;
    if (op == "delta")
        out = twisted_coproduct(p);
    else if (op == "delta-bar")
        out = restricted_coproduct(p);
    else if (op == "delta-hat")
        out = cosym_coproduct(p);
    else
        throw ParseError("coproduct: unknown --op '" + op + "'");
    std::cout << to_json(out).dump(2) << "\n";
    return kExitOk;
}

int run_verify(const std::string& suite, int n, bool json) {
    using namespace tdesc;
    Report report = run_verify_suite(suite, n, worker_count_from_env());
    if (json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report.text();
    return report.pass() ? kExitOk : kExitPropertyFailure;
}

int run_generators(int n, bool json) {
    using namespace tdesc;
    auto gens = primitive_generators(n);
    // primitivity is asserted before anything is printed
    for (const auto& [source, x] : gens) {
        TensorCombination<SetComposition> d;
        for (const auto& [k, c] : x.terms()) {
            TensorCombination<SetComposition> t = cosym_coproduct(k);
            t *= c;
            d += t;
        }
        TensorCombination<SetComposition> primitive_form =
            tensor(x, LinearCombination<SetComposition>::basis(SetComposition())) +
            tensor(LinearCombination<SetComposition>::basis(SetComposition()), x);
        if (d != primitive_form) {
            std::cerr << "generator for " << source.str() << " is not primitive\n";
            return kExitPropertyFailure;
        }
    }
    Json out = Json::array();
    for (const auto& [source, x] : gens)
        out.push_back({{"reduced", source.str()}, {"primitive", to_json(x)}});
    (void)json; // the list is JSON either way
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic on set compositions, increasing planar trees and permutations"};
    app.require_subcommand(1);

    std::string to_tree, to_comp;
    bool bij_json = false;
    CLI::App* bijection = app.add_subcommand(
        "bijection", "convert between set compositions and increasing trees");
    bijection->add_option("--to-tree", to_tree, "set composition literal, e.g. 2,6|3,4|1|5");
    bijection->add_option("--to-comp", to_comp, "increasing tree literal, e.g. (*(**))@2,1");
    bijection->add_flag("--json", bij_json, "machine-readable output");

    std::string prod_op, prod_lhs, prod_rhs;
    CLI::App* product = app.add_subcommand("product", "multiply two basis elements");
    product->add_option("--op", prod_op, "internal | conv | restricted | symmetrized | mr")
        ->required();
    product->add_option("lhs", prod_lhs)->required();
    product->add_option("rhs", prod_rhs)->required();

    std::string cop_op, cop_operand;
    CLI::App* coproduct = app.add_subcommand("coproduct", "split a basis element");
    coproduct->add_option("--op", cop_op, "delta | delta-bar | delta-hat | mr")->required();
    coproduct->add_option("operand", cop_operand)->required();

    std::string suite;
    int verify_n = -1;
    bool verify_json = false;
    CLI::App* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
    verify->add_option("suite", suite, "bijection | counts | hopf | twisted | freeness | generators | embeddings | all")
        ->required();
    verify->add_option("--n", verify_n, "degree bound (suite default when omitted)");
    verify->add_flag("--json", verify_json, "machine-readable output");

    int gen_n = 0;
    bool gen_json = false;
    CLI::App* generators =
        app.add_subcommand("generators", "free Lie generators in a given degree");
    generators->add_option("n", gen_n, "degree (<= 7)")->required()->check(CLI::Range(0, 7));
    generators->add_flag("--json", gen_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParseError;
    }

    try {
        if (*bijection) return run_bijection(to_tree, to_comp, bij_json);
        if (*product) return run_product(prod_op, prod_lhs, prod_rhs);
        if (*coproduct) return run_coproduct(cop_op, cop_operand);
        if (*verify) return run_verify(suite, verify_n, verify_json);
        if (*generators) return run_generators(gen_n, gen_json);
    } catch (const tdesc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitOk;
}
