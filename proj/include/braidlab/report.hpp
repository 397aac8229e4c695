#pragma once

#include <json.hpp>

#include <string>

#include "braidlab/homology.hpp"
#include "braidlab/kohno.hpp"
#include "braidlab/simplicial.hpp"
#include "braidlab/version.hpp"

namespace braidlab {

using json = nlohmann::json;

// All reports embed the engine version and the run parameters; with a fixed
// seed the emitted JSON is byte-identical across runs (nlohmann objects
// iterate keys in sorted order).

inline json to_json(const AbelianInvariants& a) {
    json torsion = json::array();
    for (const Int& t : a.torsion) torsion.push_back(t.str());
    return json{{"free_rank", a.free_rank}, {"invariant_factors", torsion}};
}

inline json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const GrThetaMatrix& r) {
    json divisors = json::array();
    for (const Int& d : r.elementary_divisors) divisors.push_back(d.str());
    return json{{"n", r.n},
                {"m", r.m},
                {"rows", r.matrix.rows()},
                {"cols", r.matrix.cols()},
                {"matrix", to_json(r.matrix)},
                {"rank", r.rank},
                {"witt_rank", witt_rank(r.n, r.m)},
                {"elementary_divisors", divisors},
                {"injective", r.injective}};
}

inline json to_json(const IdentityReport& r) {
    return json{{"instance", r.instance},
                {"max_level", r.max_level},
                {"checks", r.checks},
                {"failures", r.failures},
                {"ok", r.ok()}};
}

inline json to_json(const ThetaSimplicialReport& r) {
    return json{{"max_level", r.max_level},
                {"checks", r.checks},
                {"base_case_ok", r.base_case_ok},
                {"failures", r.failures},
                {"ok", r.ok()}};
}

inline json to_json(const DeltaExampleReport& r) {
    json divisors = json::array();
    for (const Int& d : r.elementary_divisors) divisors.push_back(d.str());
    return json{{"coefficient_t1", r.coeff_t1.str()},
                {"coefficient_t2", r.coeff_t2.str()},
                {"independence_rank", r.independence_rank},
                {"elementary_divisors", divisors},
                {"delta_nonzero", r.delta_nonzero},
                {"image_normal_form", r.image_normal_form},
                {"delta_normal_form", r.delta_normal_form},
                {"pass", r.pass}};
}

// Homology of the descending-central-series E^0 of F[S^1] for Lie degrees
// m <= m_max and simplicial degrees t <= max_level, together with the
// gr(Theta) injectivity certificates on the overlapping desk-scale range
// (n, m <= 4).
inline json e1_report(int m_max, int max_level) {
    if (m_max < 1 || max_level < 1) throw budget_error("e1_report: budgets must be positive");
    json cells = json::array();
    for (int m = 1; m <= m_max; ++m) {
        IntegerChainComplex c = lie_degree_complex(m, max_level + 1);
        for (int t = 1; t <= max_level; ++t) {
            AbelianInvariants h = homology(c, t);
            json cell = to_json(h);
            cell["lie_degree"] = m;
            cell["simplicial_degree"] = t;
            cell["basis_size"] = c.dim(t);
            cell["boundary_rank"] = rank_of(c.boundary(t));
            cells.push_back(std::move(cell));
        }
    }
    json certs = json::array();
    for (int n = 1; n <= std::min(max_level, 4); ++n) {
        for (int m = 1; m <= std::min(m_max, 4); ++m) {
            GrThetaMatrix r = gr_theta_matrix(n, m);
            certs.push_back(json{{"n", n},
                                 {"m", m},
                                 {"rank", r.rank},
                                 {"witt_rank", witt_rank(n, m)},
                                 {"injective", r.injective}});
        }
    }
    return json{{"engine_version", kVersion},
                {"lie_degree_max", m_max},
                {"level_max", max_level},
                {"homology", cells},
                {"theta_injectivity", certs}};
}

}  // namespace braidlab
