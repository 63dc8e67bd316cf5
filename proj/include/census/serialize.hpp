#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "census/congruence.hpp"
#include "census/ideals.hpp"
#include "census/qpoly.hpp"

namespace census {

// JSON and CSV encodings of the library objects. Keys keep insertion order so
// that output is byte-stable. Big integers travel as decimal strings.

using Json = nlohmann::ordered_json;

/// [{"exp": e, "coef": "c"}, ...] in increasing exponent order.
Json poly_to_json(const LaurentPoly& p);
/// Throws std::invalid_argument on malformed input.
LaurentPoly poly_from_json(const Json& j);

/// A polynomial encodes as an array, an integer as a decimal string.
Json count_value_to_json(const CountValue& v);
CountValue count_value_from_json(const Json& j);

Json report_to_json(const IdealCountReport& report);
IdealCountReport report_from_json(const Json& j);

/// One row per (theta, c) pair.
Json congruence_to_json(const RightCongruence& rc);

// ---- export tables ----------------------------------------------------------

/// A rectangular table rendered as JSON (array of objects) or CSV.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 quoting: fields with commas, quotes or newlines are quoted.
void write_csv(std::ostream& os, const Table& t);

/// m, count, inv_poly, p_poly for m = 1..n.
Table indec_polys_table(int n);
Json indec_polys_json(int n);

/// row, ranks, lengths, k, N, M, lambda, contribution; last row "total".
Table report_table(const IdealCountReport& report);

/// theta, torus_rank, affine_dim.
Table cells_table(int n);
Json cells_json(int n);

/// theta, c, f_c for every regular congruence of index n.
Table congruences_table(int n);
Json congruences_json(int n);

/// theta, generators (space separated, over a, b, A = a^-1, B = b^-1).
Table subgroups_table(int n);
Json subgroups_json(int n);

}  // namespace census
