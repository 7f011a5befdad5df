#pragma once

#include <string>
#include <vector>

#include "coxlat/absorder.hpp"
#include "coxlat/cluster.hpp"
#include "coxlat/complexes.hpp"
#include "coxlat/lattice.hpp"

namespace coxlat {

/// Exact coordinates rendered as canonical polynomial strings in theta.
std::vector<std::string> coord_strings(const Vec& v);

/// rho/mu table and the [mu_i . rho_j] matrix.
std::string tables_csv(const RootSystem& rs);
std::string tables_json(const RootSystem& rs);
std::string tables_text(const RootSystem& rs);

/// Complex exports.  kind is a display tag ("X", "X(sigma)", "EX").
std::string complex_json(const RootSystem& rs, const FlagComplex& c, const std::string& kind);
std::string complex_dot(const FlagComplex& c, const std::string& kind);
std::string complex_text(const RootSystem& rs, const FlagComplex& c, const std::string& kind);
/// OFF mesh of a rank-3 complex under the Cholesky embedding, 17 significant
/// digits.  Throws Error unless the rank is 3.
std::string complex_off(const RootSystem& rs, const FlagComplex& c);

std::string interval_json(const RootSystem& rs, const IntervalPoset& poset);
std::string interval_text(const RootSystem& rs, const IntervalPoset& poset);

/// Compatibility table of the almost-positive roots as CSV.
std::string compatibility_csv(const RootSystem& rs);
std::string associahedron_json(const RootSystem& rs, const FlagComplex& ga,
                               const IsoReport* iso);

/// Ambient double-precision embedding: rows of the Cholesky factor of the
/// Gram matrix give the simple roots; a coordinate vector maps to L^T c.
std::vector<std::vector<double>> cholesky_embedding(const RootSystem& rs);
std::vector<double> embed(const std::vector<std::vector<double>>& chol, const Vec& v);

}  // namespace coxlat
