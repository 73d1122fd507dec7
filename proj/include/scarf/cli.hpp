#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scarf/errors.hpp"
#include "scarf/json_io.hpp"
#include "scarf/oracle.hpp"

namespace scarf::cli {

// Exit codes: 0 success/verified, 1 verification mismatch, 2 input error,
// 3 search budget exceeded.
enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

namespace detail {

struct CommonOpts {
    std::string matrix_text;
    std::string sublattice_text;
    std::string spec_file;
    std::string output_file;
    std::string bound_text;
    std::string radius_cap_text;
    std::string stability_rounds_text;
};

inline void attach_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--matrix", o.matrix_text, "matrix rows, ';'-separated (e.g. \"2 0 3 5; 0 3 8 2\")");
    cmd->add_option("--sublattice", o.sublattice_text,
                    "sublattice basis rows (n rows of r entries), ';'-separated");
    cmd->add_option("--spec", o.spec_file, "JSON problem file; inline flags override its fields");
    cmd->add_option("--output", o.output_file, "write JSON here instead of standard output");
    cmd->add_option("--bound", o.bound_text, "grading bound for series expansion / verification");
    cmd->add_option("--radius-cap", o.radius_cap_text, "neighbor search radius cap");
    cmd->add_option("--stability-rounds", o.stability_rounds_text,
                    "consecutive empty shells required to stop the neighbor search");
}

inline io::ProblemSpec build_spec(const CommonOpts& o) {
    io::json j = io::json::object();
    if (!o.spec_file.empty()) {
        std::ifstream in(o.spec_file);
        if (!in) throw std::invalid_argument("cannot open spec file: " + o.spec_file);
        in >> j;
    }
    if (!o.matrix_text.empty()) j["matrix"] = io::rows_to_json(io::parse_rows(o.matrix_text));
    if (!o.sublattice_text.empty()) j["sublattice"] = io::rows_to_json(io::parse_rows(o.sublattice_text));
    if (!o.bound_text.empty()) j["bound"] = o.bound_text;
    if (!o.radius_cap_text.empty()) j["radius_cap"] = o.radius_cap_text;
    if (!o.stability_rounds_text.empty()) j["stability_rounds"] = o.stability_rounds_text;
    return io::spec_from_json(j);
}

inline void emit(const io::json& j, const CommonOpts& o, std::ostream& out) {
    if (!o.output_file.empty()) {
        std::ofstream f(o.output_file);
        if (!f) throw std::invalid_argument("cannot open output file: " + o.output_file);
        f << j.dump(2) << "\n";
    } else {
        out << j.dump(2) << "\n";
    }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"neighborhood complexes and semigroup generating functions"};
    app.require_subcommand(1);

    detail::CommonOpts common;
    std::string command;
    std::string cb_vector_text;
    std::string complex_file;

    auto add = [&](const std::string& name, const std::string& desc) {
        CLI::App* c = app.add_subcommand(name, desc);
        detail::attach_common(c, common);
        c->callback([&command, name] { command = name; });
        return c;
    };

    add("kernel", "canonical basis of the integer kernel of the matrix");
    add("neighbors", "neighbors of the origin in the neighborhood complex");
    add("complex", "orbit representatives of the neighborhood complex");
    CLI::App* c_genfun = add("genfun", "rational generating function (numerator and denominator)");
    c_genfun->add_option("--complex", complex_file, "assemble from a saved `complex` JSON file");
    add("series", "Laurent series coefficients up to the grading bound");
    add("frobenius", "Frobenius number from the complex (1 x n matrices)");
    CLI::App* c_cb = add("cb", "number of equivalence classes of T_b modulo the lattice");
    c_cb->add_option("--b", cb_vector_text, "target vector b (d entries)")->required();
    add("verify", "series-vs-oracle and Euler characteristic verification suite");

    try {
        std::vector<std::string> argv_rev(args.rbegin(), args.rend());
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        // `genfun --complex` needs no matrix flag; everything else does.
        if (command == "genfun" && !complex_file.empty()) {
            std::ifstream in(complex_file);
            if (!in) throw std::invalid_argument("cannot open complex file: " + complex_file);
            io::json j;
            in >> j;
            io::ComplexFile cf = io::complex_from_json(j);
            PointednessCertificate cert = positive_functional(cf.matrix);
            RationalGF gf = assemble_gf(cf.reps, cf.matrix, cert);
            detail::emit(io::genfun_to_json(gf, cf.matrix), common, out);
            return kOk;
        }

        io::ProblemSpec spec = detail::build_spec(common);
        const IntMatrix& A = spec.matrix;
        PointednessCertificate cert = positive_functional(A);
        LatticeBasis lattice = spec.sublattice ? *spec.sublattice : kernel_basis(A);

        if (command == "kernel") {
            LatticeBasis k = kernel_basis(A);
            detail::emit(io::json{{"ambient_dim", k.ambient_dim()},
                                  {"rank", k.rank()},
                                  {"basis", io::basis_to_json(k)}},
                         common, out);
            return kOk;
        }
        if (command == "neighbors") {
            std::vector<Vec> nb = neighbors(lattice, cert, spec.policy);
            io::json a = io::json::array();
            for (const Vec& h : nb) a.push_back(io::vec_to_json(h));
            detail::emit(io::json{{"count", nb.size()}, {"neighbors", a}}, common, out);
            return kOk;
        }
        if (command == "complex") {
            ScarfReps reps = scarf_representatives(lattice, cert, spec.policy);
            detail::emit(io::complex_to_json(reps, A, lattice, cert, spec.policy), common, out);
            return kOk;
        }
        if (command == "genfun") {
            ScarfReps reps = scarf_representatives(lattice, cert, spec.policy);
            RationalGF gf = assemble_gf(reps, A, cert);
            detail::emit(io::genfun_to_json(gf, A), common, out);
            return kOk;
        }
        if (command == "series") {
            if (!spec.bound) throw std::invalid_argument("series: --bound is required");
            ScarfReps reps = scarf_representatives(lattice, cert, spec.policy);
            SeriesBox s = expand_series(assemble_gf(reps, A, cert), *spec.bound);
            detail::emit(io::series_to_json(s), common, out);
            return kOk;
        }
        if (command == "frobenius") {
            ScarfReps reps = scarf_representatives(lattice, cert, spec.policy);
            Int f = frobenius_from_complex(reps, A);
            Int n_max = 0;
            for (const Simplex& s : reps.simplices) {
                Int e = A.apply(s.max_vector())[0];
                if (e > n_max) n_max = e;
            }
            detail::emit(io::json{{"frobenius", to_string(f)},
                                  {"largest_numerator_exponent", to_string(n_max)}},
                         common, out);
            return kOk;
        }
        if (command == "cb") {
            Vec b = io::parse_rows(cb_vector_text).at(0);
            Int classes = oracle::count_classes(A, cert, lattice, b);
            Int representations = Int(oracle::enumerate_Tb(A, cert, b).size());
            detail::emit(io::json{{"b", io::vec_to_json(b)},
                                  {"classes", to_string(classes)},
                                  {"representations", to_string(representations)}},
                         common, out);
            return kOk;
        }
        if (command == "verify") {
            if (!spec.bound) throw std::invalid_argument("verify: --bound is required");
            VerifyReport report = verify_pipeline(A, lattice, cert, *spec.bound, spec.policy);
            detail::emit(io::verify_to_json(report), common, out);
            return report.pass ? kOk : kVerifyFailed;
        }
        throw std::invalid_argument("unknown command");
    } catch (const BudgetExceededError& e) {
        detail::emit(io::json{{"error", {{"kind", e.kind()}, {"reason", e.what()}}}}, common, out);
        return kBudgetExceeded;
    } catch (const DomainError& e) {
        detail::emit(io::json{{"error", {{"kind", e.kind()}, {"reason", e.what()}}}}, common, out);
        return kInputError;
    } catch (const std::exception& e) {
        detail::emit(io::json{{"error", {{"kind", "InvalidInput"}, {"reason", e.what()}}}}, common, out);
        return kInputError;
    }
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args);
}

}  // namespace scarf::cli
