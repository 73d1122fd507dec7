#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "scarf/complex.hpp"
#include "scarf/genfun.hpp"
#include "scarf/int_matrix.hpp"
#include "scarf/lattice.hpp"
#include "scarf/numeric.hpp"
#include "scarf/pointed.hpp"
#include "scarf/verify.hpp"

namespace scarf::io {

using nlohmann::json;

// All numbers cross the wire as decimal strings: JSON numbers would silently
// lose exactness past 2^53 and the exponents here get much larger than that.

inline json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_string(x));
    return a;
}

inline json ratvec_to_json(const RatVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(to_string(x));
    return a;
}

inline Int json_to_int(const json& j) {
    if (j.is_string()) return parse_int(j.get<std::string>());
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    throw std::invalid_argument("expected an integer or decimal string");
}

inline Vec json_to_vec(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    Vec v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(json_to_int(e));
    return v;
}

// Matrices are arrays of rows.
inline json rows_to_json(const std::vector<Vec>& rows) {
    json a = json::array();
    for (const Vec& r : rows) a.push_back(vec_to_json(r));
    return a;
}

inline std::vector<Vec> json_to_rows(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a nonempty array of rows");
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(json_to_vec(r));
    return rows;
}

inline json matrix_to_json(const IntMatrix& A) {
    std::vector<Vec> rows(A.rows(), Vec(A.cols()));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) rows[i][j] = A(i, j);
    return rows_to_json(rows);
}

inline json basis_to_json(const LatticeBasis& B) {
    std::vector<Vec> rows(B.ambient_dim(), Vec(B.rank()));
    for (std::size_t i = 0; i < B.ambient_dim(); ++i)
        for (std::size_t j = 0; j < B.rank(); ++j) rows[i][j] = B.basis_columns()[j][i];
    return rows_to_json(rows);
}

inline json certificate_to_json(const PointednessCertificate& c) {
    return json{{"l", ratvec_to_json(c.l)}, {"w", ratvec_to_json(c.w)}};
}

inline json policy_to_json(const SearchPolicy& p) {
    return json{{"radius_cap", to_string(p.radius_cap)}, {"stability_rounds", p.stability_rounds}};
}

inline json simplex_to_json(const Simplex& s, const IntMatrix& A) {
    json verts = json::array();
    for (const Vec& v : s.vertices()) verts.push_back(vec_to_json(v));
    Vec m = s.max_vector();
    return json{{"dim", s.dim()},
                {"vertices", verts},
                {"max", vec_to_json(m)},
                {"exponent", vec_to_json(A.apply(m))}};
}

inline json complex_to_json(const ScarfReps& reps, const IntMatrix& A, const LatticeBasis& lattice,
                            const PointednessCertificate& cert, const SearchPolicy& policy) {
    json simplices = json::array();
    for (const Simplex& s : reps.simplices) simplices.push_back(simplex_to_json(s, A));
    json counts = json::array();
    if (!reps.simplices.empty())
        for (std::size_t d = 0; d <= reps.max_dim(); ++d) counts.push_back(reps.count_of_dim(d));
    return json{{"matrix", matrix_to_json(A)},   {"basis", basis_to_json(lattice)},
                {"certificate", certificate_to_json(cert)}, {"policy", policy_to_json(policy)},
                {"counts_by_dim", counts},       {"simplices", simplices}};
}

// Reads back what complex_to_json wrote; only the pieces genfun needs.
struct ComplexFile {
    IntMatrix matrix;
    ScarfReps reps;
};

inline ComplexFile complex_from_json(const json& j) {
    IntMatrix A = IntMatrix::from_rows(json_to_rows(j.at("matrix")));
    ScarfReps reps;
    for (const auto& js : j.at("simplices")) {
        std::vector<Vec> verts;
        for (const auto& jv : js.at("vertices")) verts.push_back(json_to_vec(jv));
        reps.simplices.push_back(Simplex::of(std::move(verts)));
    }
    std::sort(reps.simplices.begin(), reps.simplices.end());
    return ComplexFile{std::move(A), std::move(reps)};
}

inline json genfun_to_json(const RationalGF& gf, const IntMatrix& A) {
    json numerator = json::array();
    for (const auto& [e, c] : graded_terms(gf.numerator, gf.cert))
        numerator.push_back(json{{"coeff", to_string(c)}, {"exponent", vec_to_json(e)}});
    json denom = json::array();
    for (const Vec& a : gf.denominator_exponents) denom.push_back(vec_to_json(a));
    return json{{"matrix", matrix_to_json(A)},
                {"numerator", numerator},
                {"denominator_exponents", denom},
                {"certificate", certificate_to_json(gf.cert)}};
}

inline json series_to_json(const SeriesBox& s) {
    std::vector<std::pair<Vec, Int>> terms(s.coeffs.begin(), s.coeffs.end());
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        Rat ga = 0, gb = 0;
        for (std::size_t i = 0; i < s.l.size(); ++i) {
            ga -= s.l[i] * Rat(a.first[i]);
            gb -= s.l[i] * Rat(b.first[i]);
        }
        if (ga != gb) return ga < gb;
        return a.first < b.first;
    });
    json coeffs = json::array();
    for (const auto& [b, c] : terms)
        coeffs.push_back(json{{"exponent", vec_to_json(b)}, {"coeff", to_string(c)}});
    return json{{"bound", to_string(s.bound)}, {"l", ratvec_to_json(s.l)}, {"coefficients", coeffs}};
}

inline json verify_to_json(const VerifyReport& r) {
    json checks = json::array();
    for (const VerifyCheck& c : r.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"pass", r.pass}, {"checks", checks}};
}

// ---- problem specification ----

struct ProblemSpec {
    IntMatrix matrix;
    std::optional<LatticeBasis> sublattice;  // canonicalized; validated inside ker A
    SearchPolicy policy;
    std::optional<Rat> bound;
};

// "3 4 5" or "2 0 3 5; 0 3 8 2": rows split on ';', entries on spaces/commas.
inline std::vector<Vec> parse_rows(const std::string& text) {
    std::vector<Vec> rows;
    std::string row_text;
    std::stringstream ss(text);
    while (std::getline(ss, row_text, ';')) {
        for (char& ch : row_text)
            if (ch == ',') ch = ' ';
        std::stringstream rs(row_text);
        Vec row;
        std::string tok;
        while (rs >> tok) row.push_back(parse_int(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix text");
    return rows;
}

inline LatticeBasis validated_sublattice(const IntMatrix& A, const std::vector<Vec>& rows) {
    if (rows.size() != A.cols())
        throw std::invalid_argument("sublattice basis must have one row per matrix column");
    const std::size_t r = rows[0].size();
    std::vector<Vec> cols(r, Vec(A.cols()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != r) throw std::invalid_argument("ragged sublattice basis");
        for (std::size_t j = 0; j < r; ++j) cols[j][i] = rows[i][j];
    }
    for (const Vec& c : cols)
        if (!is_zero(A.apply(c)))
            throw std::invalid_argument("sublattice basis vector is not in the kernel of the matrix");
    return LatticeBasis::from_basis(A.cols(), cols);
}

inline ProblemSpec spec_from_json(const json& j) {
    if (!j.contains("matrix")) throw std::invalid_argument("spec: missing \"matrix\"");
    IntMatrix A = IntMatrix::from_rows(json_to_rows(j.at("matrix")));
    ProblemSpec spec{std::move(A), std::nullopt, SearchPolicy{}, std::nullopt};
    if (j.contains("sublattice") && !j.at("sublattice").is_null())
        spec.sublattice = validated_sublattice(spec.matrix, json_to_rows(j.at("sublattice")));
    if (j.contains("radius_cap")) spec.policy.radius_cap = json_to_int(j.at("radius_cap"));
    if (j.contains("stability_rounds"))
        spec.policy.stability_rounds = static_cast<unsigned>(json_to_int(j.at("stability_rounds")).get_ui());
    if (spec.policy.radius_cap < 1 || spec.policy.stability_rounds < 1)
        throw std::invalid_argument("spec: policy values must be positive");
    if (j.contains("bound")) spec.bound = Rat(json_to_int(j.at("bound")));
    return spec;
}

}  // namespace scarf::io
