#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "scarf/complex.hpp"
#include "scarf/genfun.hpp"
#include "scarf/lattice.hpp"
#include "scarf/oracle.hpp"

namespace scarf {

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    bool pass = true;
    std::vector<VerifyCheck> checks;

    void add(std::string name, bool ok, std::string detail) {
        pass = pass && ok;
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
};

// Cross-validates the complex pipeline against the brute-force oracle:
//   1. the expanded series equals the oracle class counts c_b through the
//      grading bound (full kernel: the 0/1 membership indicator);
//   2. for sampled b, every class of T_b contributes a nonempty finite
//      subcomplex of Euler characteristic 1, and their number matches;
//   3. every simplex of the sampled subcomplexes decomposes as a lattice
//      translate of exactly one computed representative.
inline VerifyReport verify_pipeline(const IntMatrix& A, const LatticeBasis& lattice,
                                    const PointednessCertificate& cert, const Rat& bound,
                                    const SearchPolicy& policy = {}, std::size_t ec_samples = 8) {
    VerifyReport rep;

    const ScarfReps reps = scarf_representatives(lattice, cert, policy);
    const SeriesBox series = expand_series(assemble_gf(reps, A, cert), bound);
    const oracle::MembershipTable table = oracle::membership_table(A, cert, bound);

    SeriesBox truth;
    truth.bound = bound;
    truth.l = cert.l;
    for (const auto& [b, tb_count] : table.counts) {
        Int classes = oracle::count_classes(A, cert, lattice, b);
        if (classes != 0) truth.coeffs.emplace(b, classes);
    }
    CompareReport cmp = series_compare(series, truth);
    rep.add("series_vs_oracle", cmp.equal(),
            cmp.equal() ? "all coefficients through the bound agree"
                        : std::to_string(cmp.diffs.size()) + " coefficient(s) differ, first at b = " +
                              [&] {
                                  std::string s = "(";
                                  for (std::size_t i = 0; i < cmp.diffs[0].b.size(); ++i)
                                      s += (i ? "," : "") + to_string(cmp.diffs[0].b[i]);
                                  return s + ")";
                              }());

    std::set<Simplex> rep_set(reps.simplices.begin(), reps.simplices.end());
    std::size_t sampled = 0;
    bool ec_ok = true, partition_ok = true;
    std::string ec_detail, partition_detail;
    for (const auto& [b, tb_count] : table.counts) {
        if (sampled >= ec_samples) break;
        ++sampled;
        std::vector<Vec> class_reps = oracle::class_representatives(A, cert, lattice, b);
        for (const Vec& xi : class_reps) {
            FiniteComplex k = subcomplex_below(lattice, cert, xi);
            if (k.empty() || euler_characteristic(k) != 1) {
                ec_ok = false;
                ec_detail = "subcomplex at a class representative of b has EC != 1";
            }
            for (const Simplex& s : k.simplices) {
                if (!rep_set.count(s.canonical())) {
                    partition_ok = false;
                    partition_detail = "a simplex of a sampled subcomplex has no computed representative";
                }
            }
        }
    }
    rep.add("euler_characteristic", ec_ok,
            ec_ok ? "EC = 1 for every sampled nonempty subcomplex" : ec_detail);
    rep.add("partition", partition_ok,
            partition_ok ? "every sampled simplex is a translate of exactly one representative"
                         : partition_detail);
    return rep;
}

}  // namespace scarf
