// vertexforge: forward/inverse scattering maps for scale-invariant star-graph
// vertices, finite-graph synthesis, and momentum sweeps of the synthesized
// graph. Subcommands compose through JSON files so intermediate artifacts
// stay inspectable; see README.md for the schemas.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vertexforge/equalscatter.hpp"
#include "vertexforge/inverse.hpp"
#include "vertexforge/json_io.hpp"
#include "vertexforge/simulator.hpp"

namespace {

using nlohmann::json;
using namespace vertexforge;

void emit(const std::string& output_path, const json& j) {
    if (output_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        save_json_file(output_path, j);
    }
}

int run_forward(const std::string& input, const std::string& output, const Tolerance& tol) {
    const ScaleInvariantCoupling c = coupling_from_json(load_json_file(input));
    const ScatteringMatrix s = scattering_closed_form(c, tol);
    emit(output, matrix_to_json(s.matrix()));
    return 0;
}

int run_invert(const std::string& input, const std::string& output, const Tolerance& tol) {
    const ScatteringMatrix s(matrix_from_json(load_json_file(input)), tol);
    const InverseResult result = recover_coupling(s, tol);
    emit(output, json{{"permutation", result.permutation},
                      {"coupling", coupling_to_json(result.coupling)}});
    return 0;
}

int run_examples(const std::string& family, std::size_t n, const std::string& output) {
    const ScatteringMatrix s =
        (family == "conference") ? conference_scattering(n) : hadamard_scattering(n);
    emit(output, matrix_to_json(s.matrix()));
    return 0;
}

int run_synthesize(const std::string& input, const std::string& output, double length_unit,
                   const Tolerance& tol) {
    const ScaleInvariantCoupling c = coupling_from_json(load_json_file(input));
    const FiniteGraphDesign design = design_from_coupling(c, length_unit, tol);
    emit(output, design_to_json(design));
    return 0;
}

int run_simulate(const std::string& input, const std::string& output,
                 const std::string& target_path, double k_min, double k_max, std::size_t steps,
                 const Tolerance& tol) {
    const FiniteGraphDesign design = design_from_json(load_json_file(input));
    std::optional<ScatteringMatrix> target;
    if (!target_path.empty()) {
        target.emplace(matrix_from_json(load_json_file(target_path)), tol);
    }
    const SweepResult result =
        sweep(design, target ? &*target : nullptr, k_min, k_max, steps);

    std::ofstream csv(output);
    if (!csv) throw Error("cannot write " + output);
    write_sweep_csv(csv, result, design.n, design.length_unit);
    save_json_file(output + ".skipped.json", skipped_to_json(result));
    return 0;
}

// Validation report for a matrix or coupling JSON. A coupling input is
// forward-mapped first; a matrix input is checked directly (without the
// validating ScatteringMatrix constructor, so failures are reported rather
// than thrown).
int run_verify(const std::string& input, const std::string& output, const Tolerance& tol) {
    const json in = load_json_file(input);
    json report;
    ComplexMatrix s;
    if (in.contains("T")) {
        const ScaleInvariantCoupling c = coupling_from_json(in);
        report["input"] = "coupling";
        report["coupling"] = {{"n", c.n}, {"m", c.m}};
        s = scattering_closed_form(c, tol).matrix();
    } else {
        report["input"] = "matrix";
        s = matrix_from_json(in);
    }

    const std::size_t n = s.rows();
    const bool square = n == s.cols() && n > 0;
    const bool hermitian = square && is_hermitian(s, tol.eq_tol);
    const bool unitary = square && is_unitary(s, tol.eq_tol);
    const bool involutive =
        square && approx_equal(s * s, ComplexMatrix::identity(n), tol.eq_tol);
    report["n"] = n;
    report["hermitian"] = hermitian;
    report["unitary"] = unitary;
    report["involutive"] = involutive;

    bool passed = hermitian && unitary && involutive;
    if (passed) {
        const std::size_t m = rank(s + ComplexMatrix::identity(n), tol);
        const bool degenerate = (m == 0 || m == n);
        report["m"] = m;
        report["degenerate"] = degenerate;
        passed = !degenerate;
        if (!degenerate) {
            const ScatteringMatrix sm(s, tol);
            if (const auto spec = classify_equal_transmission(sm, tol.eq_tol)) {
                report["equal_transmission"] = {{"n", spec->n}, {"d_param", spec->d_param}};
                report["d_bound"] = check_d_bound(*spec, tol.eq_tol);
                passed = passed && check_d_bound(*spec, tol.eq_tol);
            } else {
                report["equal_transmission"] = nullptr;
            }
        }
    }
    report["passed"] = passed;
    emit(output, report);
    return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scale-invariant quantum-graph vertex toolbox"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string input, output, target, family;
    double tol_rank = Tolerance{}.rank_tol;
    double tol_eq = Tolerance{}.eq_tol;
    double length_unit = 1.0;
    double k_min = 0.0, k_max = 0.0;
    std::size_t steps = 0, n = 0;

    app.add_option("--tol-rank", tol_rank, "relative pivot threshold")
        ->capture_default_str();
    app.add_option("--tol-eq", tol_eq, "entrywise comparison threshold")
        ->envname("VERTEXFORGE_TOL_EQ")
        ->capture_default_str();

    auto* forward = app.add_subcommand("forward", "coupling JSON -> scattering matrix JSON");
    forward->add_option("--input", input, "coupling JSON")->required();
    forward->add_option("--output", output, "matrix JSON (stdout when omitted)");

    auto* invert = app.add_subcommand("invert", "matrix JSON -> permutation + coupling JSON");
    invert->add_option("--input", input, "matrix JSON")->required();
    invert->add_option("--output", output, "result JSON (stdout when omitted)");

    auto* examples = app.add_subcommand("examples", "emit a generated scattering matrix");
    examples->add_option("--family", family, "conference|hadamard")
        ->required()
        ->check(CLI::IsMember({"conference", "hadamard"}));
    examples->add_option("--n", n, "matrix size")->required();
    examples->add_option("--output", output, "matrix JSON (stdout when omitted)");

    auto* synthesize = app.add_subcommand("synthesize", "coupling JSON -> finite design JSON");
    synthesize->add_option("--input", input, "coupling JSON")->required();
    synthesize->add_option("--length-unit", length_unit, "length unit d > 0")
        ->capture_default_str();
    synthesize->add_option("--output", output, "design JSON (stdout when omitted)");

    auto* simulate = app.add_subcommand(
        "simulate", "design JSON -> sweep CSV (+ <output>.skipped.json sidecar)");
    simulate->add_option("--input", input, "design JSON")->required();
    simulate->add_option("--output", output, "sweep CSV path")->required();
    simulate->add_option("--target", target, "target matrix JSON for the deviation column");
    simulate->add_option("--kmin", k_min, "lowest momentum")->required();
    simulate->add_option("--kmax", k_max, "highest momentum")->required();
    simulate->add_option("--steps", steps, "grid points (>= 2)")->required();

    auto* verify = app.add_subcommand("verify", "matrix or coupling JSON -> validation report");
    verify->add_option("--input", input, "matrix or coupling JSON")->required();
    verify->add_option("--output", output, "report JSON (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Tolerance tol{tol_rank, tol_eq};
        tol.validate();
        if (forward->parsed()) return run_forward(input, output, tol);
        if (invert->parsed()) return run_invert(input, output, tol);
        if (examples->parsed()) return run_examples(family, n, output);
        if (synthesize->parsed()) return run_synthesize(input, output, length_unit, tol);
        if (simulate->parsed())
            return run_simulate(input, output, target, k_min, k_max, steps, tol);
        if (verify->parsed()) return run_verify(input, output, tol);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
