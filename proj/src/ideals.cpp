#include "census/ideals.hpp"

#include <stdexcept>

#include "census/errors.hpp"
#include "census/haglund.hpp"
#include "census/parallel.hpp"

namespace census {

LaurentPoly A_formula(int n) {
  if (n < 1) {
    throw InvalidCodimension("the formula is stated for codimension n >= 1; at n = 0 it gives (q-1)/q, not 1");
  }
  const LaurentPoly prefactor = q_minus_one_pow(static_cast<unsigned>(n + 1)).shifted((n + 1) * (n - 2) / 2);
  const LaurentPoly result = prefactor * indec_inv_polynomial(n + 1);
  if (!result.is_polynomial()) throw std::logic_error("A_formula produced negative exponents");
  return result;
}

LaurentPoly A_formula_p(int n) {
  if (n < 1) throw InvalidCodimension("codimension must be at least 1");
  return q_minus_one_pow(static_cast<unsigned>(n + 1)) * indec_p_polynomial(n + 1).shifted(-(n + 1));
}

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::Formula: return "formula";
    case CountMethod::Structural: return "structural";
    case CountMethod::BruteForce: return "bruteforce";
  }
  return "?";
}

CountMethod parse_count_method(const std::string& name) {
  if (name == "formula") return CountMethod::Formula;
  if (name == "structural") return CountMethod::Structural;
  if (name == "bruteforce") return CountMethod::BruteForce;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::string to_string(const CountValue& v) {
  if (const auto* poly = std::get_if<LaurentPoly>(&v)) return poly->to_string();
  return std::get<mpz_class>(v).get_str();
}

bool IdealCountReport::breakdown_consistent() const {
  if (trees.empty()) return true;
  if (std::holds_alternative<LaurentPoly>(total)) {
    LaurentPoly sum;
    for (const auto& t : trees) {
      const auto* poly = std::get_if<LaurentPoly>(&t.contribution);
      if (poly == nullptr) return false;
      sum += *poly;
    }
    return sum == std::get<LaurentPoly>(total);
  }
  mpz_class sum = 0;
  for (const auto& t : trees) {
    const auto* value = std::get_if<mpz_class>(&t.contribution);
    if (value == nullptr) return false;
    sum += *value;
  }
  return sum == std::get<mpz_class>(total);
}

IdealCountReport formula_report(int n) {
  IdealCountReport report;
  report.n = n;
  report.method = CountMethod::Formula;
  report.total = A_formula(n);
  return report;
}

namespace {

TreeContribution describe(const CodeTree& tree) {
  const TreeStats st = tree_stats(tree);
  TreeContribution row;
  row.signature = signature(tree);
  row.k = st.k;
  row.N = st.N;
  row.M = st.M;
  row.lambda = st.lambda;
  return row;
}

}  // namespace

IdealCountReport A_structural(int n) {
  if (n < 1) throw InvalidCodimension("codimension must be at least 1");
  IdealCountReport report;
  report.n = n;
  report.method = CountMethod::Structural;
  LaurentPoly total;
  for (const auto& tree : enumerate_trees(n)) {
    TreeContribution row = describe(tree);
    LaurentPoly value = q_minus_one_pow(static_cast<unsigned>(row.k)).shifted(row.N + row.M) * H_product(row.lambda);
    total += value;
    row.contribution = std::move(value);
    report.trees.push_back(std::move(row));
  }
  report.total = std::move(total);
  return report;
}

// ---- coefficient assignments ---------------------------------------------

CoefficientAssignment::CoefficientAssignment(CodeTree tree, std::uint32_t p)
    : tree_(std::move(tree)), modulus_(p), slots_(slots_of(tree_)), values_(slots_.size(), 0) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

std::vector<CoefficientAssignment::Slot> CoefficientAssignment::slots_of(const CodeTree& tree) {
  std::vector<Slot> slots;
  for (std::size_t c = 0; c < tree.leaves().size(); ++c) {
    for (std::size_t q = 0; q < tree.internal().size(); ++q) {
      if (tree.internal()[q] < tree.leaves()[c]) slots.push_back({static_cast<int>(c), static_cast<int>(q)});
    }
  }
  return slots;
}

void CoefficientAssignment::set_slot(std::size_t i, std::int64_t value) {
  values_.at(i) = FqScalar(value, modulus_).value();
}

std::size_t CoefficientAssignment::slot_index(const Word& c, const Word& p) const {
  const int ci = tree_.leaf_index(c);
  const int pi = tree_.internal_index(p);
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i].leaf == ci && slots_[i].internal == pi) return i;
  }
  throw std::out_of_range("no coefficient alpha(" + c.to_string() + ", " + p.to_string() + ")");
}

FqScalar CoefficientAssignment::alpha(const Word& c, const Word& p) const {
  return FqScalar(values_[slot_index(c, p)], modulus_);
}

void CoefficientAssignment::set(const Word& c, const Word& p, std::int64_t value) { set_slot(slot_index(c, p), value); }

std::pair<FqMatrix, FqMatrix> build_mu_matrices(const CoefficientAssignment& ca) {
  const CodeTree& t = ca.tree();
  const int dim = t.n();
  FqMatrix mu_a(dim, dim, ca.modulus());
  FqMatrix mu_b(dim, dim, ca.modulus());
  for (int row = 0; row < dim; ++row) {
    const Word& p = t.internal()[static_cast<std::size_t>(row)];
    for (char x : {'a', 'b'}) {
      FqMatrix& m = (x == 'a') ? mu_a : mu_b;
      const Word px = p.append(x);
      if (const int col = t.internal_index(px); col >= 0) {
        m.set(row, col, 1);
      }
    }
  }
  for (std::size_t i = 0; i < ca.slots().size(); ++i) {
    const auto& slot = ca.slots()[i];
    const Word& c = t.leaves()[static_cast<std::size_t>(slot.leaf)];
    FqMatrix& m = c.ends_with('a') ? mu_a : mu_b;
    m.set(t.internal_index(c.drop_back()), slot.internal, ca.slot_value(i));
  }
  return {std::move(mu_a), std::move(mu_b)};
}

namespace {

enum class Leg { A, B, Joint };

// Enumerates the coefficients that feed the requested leg(s), editing the
// affected matrix cell in place, and counts assignments whose required
// matrices are invertible.
mpz_class count_leg(const CodeTree& tree, std::uint32_t p, std::uint64_t budget, Leg leg) {
  CoefficientAssignment ca(tree, p);
  auto [mu_a, mu_b] = build_mu_matrices(ca);
  struct Target {
    bool in_a;
    int row;
    int col;
  };
  std::vector<Target> targets;
  for (const auto& slot : ca.slots()) {
    const Word& c = tree.leaves()[static_cast<std::size_t>(slot.leaf)];
    const bool in_a = c.ends_with('a');
    if (leg == Leg::A && !in_a) continue;
    if (leg == Leg::B && in_a) continue;
    targets.push_back({in_a, tree.internal_index(c.drop_back()), slot.internal});
  }
  checked_power(p, targets.size(), budget);
  const bool need_a = leg != Leg::B;
  const bool need_b = leg != Leg::A;
  std::vector<std::uint32_t> digit(targets.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    if ((!need_a || is_invertible(mu_a)) && (!need_b || is_invertible(mu_b))) ++count;
    std::size_t i = 0;
    while (i < digit.size()) {
      const Target& t = targets[i];
      FqMatrix& m = t.in_a ? mu_a : mu_b;
      if (++digit[i] < p) {
        m.set(t.row, t.col, digit[i]);
        break;
      }
      digit[i] = 0;
      m.set(t.row, t.col, 0);
      ++i;
    }
    if (i == digit.size()) break;
  }
  return mpz_class(static_cast<unsigned long>(count));
}

}  // namespace

mpz_class brute_force_tree(const CodeTree& tree, std::uint32_t p, std::uint64_t budget) {
  return count_leg(tree, p, budget, Leg::Joint);
}

mpz_class mu_a_count(const CodeTree& tree, std::uint32_t p, std::uint64_t budget) {
  return count_leg(tree, p, budget, Leg::A);
}

mpz_class mu_b_count(const CodeTree& tree, std::uint32_t p, std::uint64_t budget) {
  return count_leg(tree, p, budget, Leg::B);
}

IdealCountReport brute_force_A(int n, std::uint32_t p, std::uint64_t budget) {
  if (n < 1) throw InvalidCodimension("codimension must be at least 1");
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const auto trees = enumerate_trees(n);
  // Fail fast on the budget before starting any work.
  for (const auto& tree : trees) checked_power(p, CoefficientAssignment::slots_of(tree).size(), budget);
  std::vector<mpz_class> counts(trees.size());
  parallel_for(trees.size(), [&](std::size_t i) { counts[i] = brute_force_tree(trees[i], p, budget); });
  IdealCountReport report;
  report.n = n;
  report.method = CountMethod::BruteForce;
  report.q = p;
  mpz_class total = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    TreeContribution row = describe(trees[i]);
    row.contribution = counts[i];
    total += counts[i];
    report.trees.push_back(std::move(row));
  }
  report.total = total;
  return report;
}

PairCounts pair_counts(const CodeTree& tree, std::uint32_t p, std::uint64_t budget) {
  PairCounts pc;
  pc.a_count = mu_a_count(tree, p, budget);
  pc.b_count = mu_b_count(tree, p, budget);
  pc.joint = brute_force_tree(tree, p, budget);
  const TreeStats st = tree_stats(tree);
  const LaurentPoly expected_a = q_minus_one_pow(static_cast<unsigned>(st.k)).shifted(st.N);
  const LaurentPoly expected_b = H_product(st.lambda).shifted(st.M);
  pc.expected_a = expected_a.eval_integer(p);
  pc.expected_b = expected_b.eval_integer(p);
  return pc;
}

CheckOutcome per_tree_pair_count_check(int n, std::uint32_t p, std::uint64_t budget) {
  for (const auto& tree : enumerate_trees(n)) {
    const PairCounts pc = pair_counts(tree, p, budget);
    const std::string where = " on " + tree.to_string() + " at p=" + std::to_string(p);
    if (pc.a_count != pc.expected_a) {
      return CheckOutcome::fail("mu(a) count " + pc.a_count.get_str() + " != " + pc.expected_a.get_str() + where);
    }
    if (pc.b_count != pc.expected_b) {
      return CheckOutcome::fail("mu(b) count " + pc.b_count.get_str() + " != " + pc.expected_b.get_str() + where);
    }
    if (pc.joint != pc.a_count * pc.b_count) {
      return CheckOutcome::fail("joint count " + pc.joint.get_str() + " is not the product" + where);
    }
  }
  return CheckOutcome::pass();
}

// ---- generators and cells -------------------------------------------------

std::string IdealGenerator::to_string() const {
  std::string out = leading.to_power_string();
  for (const auto& [word, coef] : lower_terms) {
    out += " - ";
    if (coef.value() != 1) out += std::to_string(coef.value()) + "*";
    out += word.to_power_string();
  }
  return out;
}

std::vector<IdealGenerator> ideal_generators(const CoefficientAssignment& ca) {
  const CodeTree& t = ca.tree();
  std::vector<IdealGenerator> gens;
  for (const auto& c : t.leaves()) gens.push_back({c, {}});
  for (std::size_t i = 0; i < ca.slots().size(); ++i) {
    if (ca.slot_value(i) == 0) continue;
    const auto& slot = ca.slots()[i];
    gens[static_cast<std::size_t>(slot.leaf)].lower_terms.emplace_back(
        t.internal()[static_cast<std::size_t>(slot.internal)], FqScalar(ca.slot_value(i), ca.modulus()));
  }
  return gens;
}

LaurentPoly CellDecomposition::polynomial() const {
  std::vector<LaurentPoly::Term> terms;
  unsigned torus = 0;
  for (const auto& cell : cells) {
    terms.emplace_back(cell.affine_dim, 1);
    torus = static_cast<unsigned>(cell.torus_rank);
  }
  return q_minus_one_pow(torus) * LaurentPoly::from_terms(std::move(terms));
}

CellDecomposition cell_decomposition(int n) {
  if (n < 1) throw InvalidCodimension("codimension must be at least 1");
  CellDecomposition dec;
  dec.n = n;
  enumerate_indecomposables(n + 1, [&](const Permutation& theta) {
    dec.cells.push_back({theta, n + 1, (n + 1) * (n - 2) / 2 + inversions(theta)});
  });
  return dec;
}

}  // namespace census
