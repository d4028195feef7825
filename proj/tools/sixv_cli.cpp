// Command-line front end: verification, composition, classification, family
// construction, axiom checks, and fuzzing over the JSON interchange format.
//
// Exit codes: 0 = affirmative, 1 = well-formed negative/undefined,
// 2 = usage/input error.

#include "sixv/families.hpp"
#include "sixv/groupoid.hpp"
#include "sixv/json_io.hpp"
#include "sixv/ybe.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace sixv;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Mode default_mode() {
    if (const char* env = std::getenv("SIXV_MODE")) {
        const std::string v = env;
        if (v == "float") return Mode::floating;
        if (v == "exact") return Mode::exact;
        throw ParseError("SIXV_MODE must be 'exact' or 'float'");
    }
    return Mode::exact;
}

int cmd_verify(const std::string& input, double eps) {
    const YbTriple t = triple_from_json(parse_json_text(read_input(input)));
    const auto residuals = component_residuals(t.u, t.w, t.v);
    const bool solution = is_yb_solution(t.u, t.w, t.v, eps);
    emit(Json{{"residuals", residuals_to_json(residuals)}, {"solution", solution}});
    return solution ? 0 : 1;
}

int cmd_compose(const std::string& input, const std::string& which, double eps) {
    const Json j = parse_json_text(read_input(input));
    YbSolveResult r = [&] {
        if (which == "w")
            return solve_w(matrix_from_json(j.at("u")), matrix_from_json(j.at("v")), eps);
        if (which == "u")
            return solve_u(matrix_from_json(j.at("w")), matrix_from_json(j.at("v")), eps);
        return solve_v(matrix_from_json(j.at("u")), matrix_from_json(j.at("w")), eps);
    }();
    if (r.defined()) {
        emit(matrix_to_json(*r.matrix));
        return 0;
    }
    Json out{{"defined", false}, {"conditions", conditions_to_json(r.conditions)}};
    if (r.status == SolveStatus::degenerate) {
        out["reason"] = "degenerate";
        out["vanishing"] = r.vanishing;
    } else {
        out["reason"] = "conditions";
    }
    emit(out);
    return 1;
}

int cmd_classify(const std::string& input, double eps) {
    const SixVertexMatrix m = matrix_from_json(parse_json_text(read_input(input)));
    emit(flags_to_json(m.classify(eps)));
    return 0;
}

int cmd_dual(const std::string& input, double eps) {
    const SixVertexMatrix m = matrix_from_json(parse_json_text(read_input(input)));
    try {
        emit(matrix_to_json(m.dual(eps)));
        return 0;
    } catch (const UndefinedDualError& e) {
        emit(Json{{"error", e.what()}});
        return 1;
    }
}

struct FamilyArgs {
    std::string kind;
    std::string flavor = "cf";
    std::string which = "b1";
    std::string q1, q2, beta = "1", z1, z2, w = "1";
    std::string m11, m12, m21, m22, c;
    std::string q, z;
    int n = 2, k = 1, max_legs = kTlDefaultMaxLegs;
    std::string mode;
};

Scalar parse_param(const std::string& text, const std::string& name, ScalarMode mode) {
    if (text.empty()) throw ParseError("missing required parameter --" + name);
    return Scalar::parse(text, mode);
}

int cmd_family(const FamilyArgs& a, const std::string& input, double eps) {
    if (a.kind.empty()) {
        // no --kind: the whole request arrives as JSON
        emit(matrix_to_json(family_from_json(parse_json_text(read_input(input)))));
        return 0;
    }
    ScalarMode mode = ScalarMode::exact();
    if (a.mode == "float" || (a.mode.empty() && default_mode() == Mode::floating))
        mode = ScalarMode::floating(eps);
    const FamilyKind flavor = a.flavor == "ff" ? FamilyKind::ff : FamilyKind::cf;
    const auto p = [&](const std::string& text, const char* name) {
        return parse_param(text, name, mode);
    };

    if (a.kind == "asm") {
        emit(matrix_to_json(asm_matrix()));
        return 0;
    }
    if (a.kind == "tau") {
        emit(matrix_to_json(tau({p(a.m11, "m11"), p(a.m12, "m12"), p(a.m21, "m21"),
                                 p(a.m22, "m22"), p(a.c, "c")})));
        return 0;
    }
    if (a.kind == "cf" || a.kind == "ff") {
        const FamilyKind kind = a.kind == "ff" ? FamilyKind::ff : FamilyKind::cf;
        emit(matrix_to_json(r_family({p(a.q1, "q1"), p(a.q2, "q2"), p(a.beta, "beta")}, kind,
                                     {p(a.z1, "z1"), p(a.z2, "z2"), p(a.w, "w")})));
        return 0;
    }
    if (a.kind == "quantum") {
        emit(matrix_to_json(quantum_r(p(a.q, "q"), p(a.z, "z"), flavor)));
        return 0;
    }
    if (a.kind == "five") {
        const FiveVertexWhich which =
            a.which == "b2" ? FiveVertexWhich::b2_zero : FiveVertexWhich::b1_zero;
        emit(matrix_to_json(five_vertex(flavor, which, p(a.beta, "beta"),
                                        {p(a.z1, "z1"), p(a.z2, "z2"), p(a.w, "w")})));
        return 0;
    }
    if (a.kind == "tl") {
        const TlOperator op = tl_generator(p(a.q, "q"), a.n, a.k, a.max_legs);
        Json rows = Json::array();
        for (int i = 0; i < op.op.dim(); ++i) {
            Json row = Json::array();
            for (int jcol = 0; jcol < op.op.dim(); ++jcol)
                row.push_back(scalar_to_json(op.op.at(i, jcol)));
            rows.push_back(std::move(row));
        }
        emit(Json{{"n", op.n}, {"k", op.k}, {"dim", op.op.dim()}, {"entries", rows}});
        return 0;
    }
    throw ParseError("unknown family kind '" + a.kind + "'");
}

int report_exit(const FuzzReport& r) {
    emit(report_to_json(r));
    return r.failures.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"six-vertex Yang-Baxter toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    double eps = kDefaultEps;

    auto* verify = app.add_subcommand("verify", "check a triple against the Yang-Baxter equation");
    verify->add_option("--input", input, "JSON file with {\"u\":...,\"w\":...,\"v\":...} ('-' = stdin)");

    auto* compose = app.add_subcommand("compose", "solve the Yang-Baxter equation for one matrix");
    std::string compose_case = "w";
    compose->add_option("--case", compose_case, "which matrix to solve for")
        ->check(CLI::IsMember({"w", "u", "v"}));
    compose->add_option("--input", input, "JSON pair keyed by role ('-' = stdin)");

    auto* classify = app.add_subcommand("classify", "evaluate the class predicates of a matrix");
    classify->add_option("--input", input, "JSON six-vertex matrix ('-' = stdin)");

    auto* dual = app.add_subcommand("dual", "emit the dual matrix");
    dual->add_option("--input", input, "JSON six-vertex matrix ('-' = stdin)");

    auto* family = app.add_subcommand("family", "construct a parametrized matrix");
    FamilyArgs fa;
    family->add_option("--kind", fa.kind, "tau | cf | ff | five | quantum | asm | tl (omit to read a JSON request)");
    family->add_option("--input", input, "JSON family request when --kind is omitted");
    family->add_option("--flavor", fa.flavor, "cf | ff (quantum, five)")
        ->check(CLI::IsMember({"cf", "ff"}));
    family->add_option("--which", fa.which, "vanishing entry for five: b1 | b2")
        ->check(CLI::IsMember({"b1", "b2"}));
    family->add_option("--mode", fa.mode, "exact | float (default from SIXV_MODE, else exact)")
        ->check(CLI::IsMember({"exact", "float"}));
    family->add_option("--q1", fa.q1);
    family->add_option("--q2", fa.q2);
    family->add_option("--beta", fa.beta);
    family->add_option("--z1", fa.z1);
    family->add_option("--z2", fa.z2);
    family->add_option("--w", fa.w);
    family->add_option("--m11", fa.m11);
    family->add_option("--m12", fa.m12);
    family->add_option("--m21", fa.m21);
    family->add_option("--m22", fa.m22);
    family->add_option("--c", fa.c);
    family->add_option("--q", fa.q);
    family->add_option("--z", fa.z);
    family->add_option("--n", fa.n, "tensor legs (tl)");
    family->add_option("--k", fa.k, "generator position (tl)");
    family->add_option("--max-legs", fa.max_legs, "tensor leg bound (tl)");

    auto* fuzz = app.add_subcommand("fuzz", "associativity fuzzing over sampled chains");
    std::string strategy = "family_exact";
    std::uint64_t seed = 0;
    int trials = 100;
    fuzz->add_option("--strategy", strategy, "family_exact | cross_float")
        ->check(CLI::IsMember({"family_exact", "cross_float"}));
    fuzz->add_option("--seed", seed, "master seed");
    fuzz->add_option("--trials", trials, "number of chains");

    auto* axioms = app.add_subcommand("axioms", "groupoid/invertible-magmoid axiom suite");
    std::uint64_t ax_seed = 0;
    int ax_samples = 200;
    axioms->add_option("--seed", ax_seed, "master seed");
    axioms->add_option("--samples", ax_samples, "number of sampled pairs");

    for (auto* sc : {verify, compose, classify, dual, family, fuzz, axioms})
        sc->add_option("--eps", eps, "relative tolerance for floating-mode comparisons");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(input, eps);
        if (compose->parsed()) return cmd_compose(input, compose_case, eps);
        if (classify->parsed()) return cmd_classify(input, eps);
        if (dual->parsed()) return cmd_dual(input, eps);
        if (family->parsed()) return cmd_family(fa, input, eps);
        if (fuzz->parsed()) {
            const SampleStrategy s = strategy == "cross_float" ? SampleStrategy::cross_float
                                                               : SampleStrategy::family_exact;
            return report_exit(associativity_fuzz(s, seed, trials, eps));
        }
        if (axioms->parsed())
            return report_exit(
                axiom_suite(sample_composable(SampleStrategy::family_exact, ax_seed, ax_samples, 2), kDefaultEps));
    } catch (const sixv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // missing JSON keys and similar malformed-input shapes
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
