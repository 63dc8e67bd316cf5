#include "census/serialize.hpp"

#include <stdexcept>

namespace census {

Json poly_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [exp, coef] : p.terms()) out.push_back({{"exp", exp}, {"coef", coef.get_str()}});
  return out;
}

namespace {

mpz_class parse_integer(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a decimal string, got " + j.dump());
  mpz_class value;
  if (value.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer " + j.dump());
  return value;
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array, got " + j.dump());
  return j.get<std::vector<int>>();
}

}  // namespace

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("exp") || !term.contains("coef")) {
      throw std::invalid_argument("bad polynomial term " + term.dump());
    }
    terms.emplace_back(term.at("exp").get<LaurentPoly::Exponent>(), parse_integer(term.at("coef")));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Json count_value_to_json(const CountValue& v) {
  if (const auto* poly = std::get_if<LaurentPoly>(&v)) return poly_to_json(*poly);
  return std::get<mpz_class>(v).get_str();
}

CountValue count_value_from_json(const Json& j) {
  if (j.is_array()) return poly_from_json(j);
  return parse_integer(j);
}

Json report_to_json(const IdealCountReport& report) {
  Json out;
  out["n"] = report.n;
  out["method"] = to_string(report.method);
  if (report.q) out["q"] = *report.q;
  out["total"] = count_value_to_json(report.total);
  Json trees = Json::array();
  for (const auto& t : report.trees) {
    Json row;
    row["signature"] = {{"ranks", t.signature.ranks}, {"lengths", t.signature.lengths}};
    row["k"] = t.k;
    row["N"] = t.N;
    row["M"] = t.M;
    row["lambda"] = t.lambda.parts();
    row["contribution"] = count_value_to_json(t.contribution);
    trees.push_back(std::move(row));
  }
  out["trees"] = std::move(trees);
  return out;
}

IdealCountReport report_from_json(const Json& j) {
  try {
    IdealCountReport report;
    report.n = j.at("n").get<int>();
    report.method = parse_count_method(j.at("method").get<std::string>());
    if (j.contains("q")) report.q = j.at("q").get<std::uint32_t>();
    report.total = count_value_from_json(j.at("total"));
    for (const auto& row : j.at("trees")) {
      TreeContribution t;
      t.signature.n = report.n;
      t.signature.ranks = int_list(row.at("signature").at("ranks"));
      t.signature.lengths = int_list(row.at("signature").at("lengths"));
      t.k = row.at("k").get<int>();
      t.N = row.at("N").get<std::int64_t>();
      t.M = row.at("M").get<std::int64_t>();
      t.lambda = Partition(int_list(row.at("lambda")));
      t.contribution = count_value_from_json(row.at("contribution"));
      report.trees.push_back(std::move(t));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

Json congruence_to_json(const RightCongruence& rc) {
  Json pairs = Json::array();
  for (std::size_t i = 0; i < rc.tree().leaves().size(); ++i) {
    pairs.push_back({{"c", rc.tree().leaves()[i].to_power_string()}, {"f", rc.images()[i].to_power_string()}});
  }
  return pairs;
}

// ---- tables -----------------------------------------------------------------

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
}

Table indec_polys_table(int n) {
  Table t{{"m", "count", "inv_poly", "p_poly"}, {}};
  for (int m = 1; m <= n; ++m) {
    const LaurentPoly inv = indec_inv_polynomial(m);
    mpz_class count = inv.eval_integer(1);
    t.rows.push_back({std::to_string(m), count.get_str(), inv.to_string(), indec_p_polynomial(m).to_string()});
  }
  return t;
}

Json indec_polys_json(int n) {
  Json out = Json::array();
  for (int m = 1; m <= n; ++m) {
    const LaurentPoly inv = indec_inv_polynomial(m);
    out.push_back({{"m", m},
                   {"count", inv.eval_integer(1).get_str()},
                   {"inv", poly_to_json(inv)},
                   {"p", poly_to_json(indec_p_polynomial(m))}});
  }
  return out;
}

Table report_table(const IdealCountReport& report) {
  Table t{{"row", "ranks", "lengths", "k", "N", "M", "lambda", "contribution"}, {}};
  for (std::size_t i = 0; i < report.trees.size(); ++i) {
    const auto& tr = report.trees[i];
    t.rows.push_back({std::to_string(i + 1), join(tr.signature.ranks, ' '), join(tr.signature.lengths, ' '),
                      std::to_string(tr.k), std::to_string(tr.N), std::to_string(tr.M), join(tr.lambda.parts(), ' '),
                      to_string(tr.contribution)});
  }
  t.rows.push_back({"total", "", "", "", "", "", "", to_string(report.total)});
  return t;
}

Table cells_table(int n) {
  Table t{{"theta", "torus_rank", "affine_dim"}, {}};
  for (const auto& cell : cell_decomposition(n).cells) {
    t.rows.push_back({cell.theta.to_string(), std::to_string(cell.torus_rank), std::to_string(cell.affine_dim)});
  }
  return t;
}

Json cells_json(int n) {
  const CellDecomposition dec = cell_decomposition(n);
  Json cells = Json::array();
  for (const auto& cell : dec.cells) {
    cells.push_back(
        {{"theta", cell.theta.to_string()}, {"torus_rank", cell.torus_rank}, {"affine_dim", cell.affine_dim}});
  }
  return {{"n", n}, {"cells", std::move(cells)}, {"polynomial", poly_to_json(dec.polynomial())}};
}

Table congruences_table(int n) {
  Table t{{"theta", "c", "f_c"}, {}};
  for (const auto& rc : all_regular(n)) {
    const std::string theta = to_indecomposable(rc).to_string();
    for (std::size_t i = 0; i < rc.tree().leaves().size(); ++i) {
      t.rows.push_back({theta, rc.tree().leaves()[i].to_power_string(), rc.images()[i].to_power_string()});
    }
  }
  return t;
}

Json congruences_json(int n) {
  Json out = Json::array();
  for (const auto& rc : all_regular(n)) {
    out.push_back({{"theta", to_indecomposable(rc).to_string()}, {"pairs", congruence_to_json(rc)}});
  }
  return out;
}

Table subgroups_table(int n) {
  Table t{{"theta", "generators"}, {}};
  for (const auto& rc : all_regular(n)) {
    std::string gens;
    for (const auto& g : subgroup_generators(rc)) gens += (gens.empty() ? "" : " ") + g;
    t.rows.push_back({to_indecomposable(rc).to_string(), gens});
  }
  return t;
}

Json subgroups_json(int n) {
  Json out = Json::array();
  for (const auto& rc : all_regular(n)) {
    out.push_back({{"theta", to_indecomposable(rc).to_string()}, {"generators", subgroup_generators(rc)}});
  }
  return out;
}

}  // namespace census
