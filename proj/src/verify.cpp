#include "census/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "census/congruence.hpp"
#include "census/haglund.hpp"
#include "census/ideals.hpp"
#include "census/parallel.hpp"
#include "census/permstat.hpp"
#include "census/words.hpp"

namespace census {

namespace {

std::string at_n(int n) { return " (n=" + std::to_string(n) + ")"; }

std::string pair_label(int n, std::uint32_t p) {
  return "(n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")";
}

}  // namespace

// ---- qpoly ------------------------------------------------------------------

CheckOutcome check_polynomial_axioms(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> exp(-4, 6);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> len(0, 5);
  auto random_poly = [&] {
    std::vector<LaurentPoly::Term> terms;
    for (int i = len(rng); i > 0; --i) terms.emplace_back(exp(rng), coef(rng));
    return LaurentPoly::from_terms(std::move(terms));
  };
  std::uniform_int_distribution<long> point(-5, 5);
  for (int i = 0; i < samples; ++i) {
    const LaurentPoly p = random_poly();
    const LaurentPoly r = random_poly();
    const LaurentPoly s = random_poly();
    if ((p + r) * s != p * s + r * s) {
      return CheckOutcome::fail("distributivity fails for " + p.to_string() + ", " + r.to_string() + ", " + s.to_string());
    }
    long x = point(rng);
    if (x == 0) x = 1;
    if ((p * r).eval(x) != p.eval(x) * r.eval(x)) {
      return CheckOutcome::fail("eval is not multiplicative at q=" + std::to_string(x) + " for " + p.to_string() +
                                ", " + r.to_string());
    }
  }
  return CheckOutcome::pass();
}

// ---- permstat ---------------------------------------------------------------

CheckOutcome check_hook_identities(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    CheckOutcome out;
    enumerate_permutations(n, [&](const Permutation& s) {
      if (!out) return;
      const std::int64_t hooks = hook_union_size(s);
      const std::int64_t inv = inversions(s);
      if (hooks != 2 * inv + versions(s) || hooks != inv + binomial2(n)) {
        out = CheckOutcome::fail("hook union of " + s.to_string() + " is " + std::to_string(hooks));
      } else if (inversions(s.inverse()) != inv || hook_union_size(s.inverse()) != hooks) {
        out = CheckOutcome::fail("transpose symmetry fails at " + s.to_string());
      }
    });
    if (!out) return out;
  }
  return CheckOutcome::pass();
}

CheckOutcome check_indecomposable_criteria(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    CheckOutcome out;
    enumerate_permutations(n, [&](const Permutation& s) {
      if (out && is_indecomposable(s) != is_indecomposable_lr(s)) {
        out = CheckOutcome::fail("criteria disagree at " + s.to_string());
      }
    });
    if (!out) return out;
  }
  return CheckOutcome::pass();
}

CheckOutcome check_ptheta(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    CheckOutcome out;
    enumerate_permutations(n, [&](const Permutation& s) {
      if (!out) return;
      const auto sides = ptheta_sides(s);
      if (sides.lhs != sides.rhs) {
        out = CheckOutcome::fail("p(" + s.to_string() + ") = " + std::to_string(sides.lhs) + " but the decomposition gives " +
                                 std::to_string(sides.rhs));
      }
    });
    if (!out) return out;
  }
  return CheckOutcome::pass();
}

CheckOutcome check_unique_factorization(int max_n) {
  // products[n]: every shifted concatenation of indecomposables of total size n
  std::vector<std::vector<Permutation>> products(static_cast<std::size_t>(max_n) + 1);
  products[0].push_back(Permutation::identity(0));
  std::vector<std::vector<Permutation>> indec(static_cast<std::size_t>(max_n) + 1);
  for (int m = 1; m <= max_n; ++m) indec[static_cast<std::size_t>(m)] = all_indecomposables(m);
  for (int n = 1; n <= max_n; ++n) {
    auto& here = products[static_cast<std::size_t>(n)];
    for (int m = 1; m <= n; ++m) {
      for (const auto& head : indec[static_cast<std::size_t>(m)]) {
        for (const auto& tail : products[static_cast<std::size_t>(n - m)]) {
          const Permutation s = shifted_concat(head, tail);
          if (inversions(s) != inversions(head) + inversions(tail)) {
            return CheckOutcome::fail("inv not additive on " + head.to_string() + " . " + tail.to_string());
          }
          here.push_back(s);
        }
      }
    }
    std::set<Permutation> seen(here.begin(), here.end());
    if (seen.size() != here.size()) return CheckOutcome::fail("a permutation factors twice" + at_n(n));
    if (here.size() != all_permutations(n).size()) return CheckOutcome::fail("products miss a permutation" + at_n(n));
    for (const auto& s : here) {
      Permutation rebuilt = Permutation::identity(0);
      for (const auto& f : indecomposable_factors(s)) {
        if (!is_indecomposable(f)) return CheckOutcome::fail("factor " + f.to_string() + " of " + s.to_string());
        rebuilt = shifted_concat(rebuilt, f);
      }
      if (rebuilt != s) return CheckOutcome::fail("factors of " + s.to_string() + " do not multiply back");
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome check_q_factorial(int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    if (inv_polynomial(n) != q_factorial(static_cast<unsigned>(n))) {
      return CheckOutcome::fail("inversion polynomial differs from [n]_q!" + at_n(n));
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome check_series(unsigned order) {
  if (!series_identity_check(order)) return CheckOutcome::fail("series identity fails to order " + std::to_string(order));
  return CheckOutcome::pass();
}

// ---- words ------------------------------------------------------------------

namespace {

CheckOutcome mu_bijections(const CodeTree& t) {
  const TreeParts parts = tree_parts(t);
  auto image_is = [](const std::vector<Word>& from, Word (*map)(const Word&), std::vector<Word> to) {
    std::vector<Word> image;
    for (const auto& w : from) image.push_back(map(w));
    std::sort(image.begin(), image.end());
    std::sort(to.begin(), to.end());
    return image == to;
  };
  if (!image_is(parts.ca, mu_a, parts.pb)) return CheckOutcome::fail("mu_a: C_a -> P_b fails on " + t.to_string());
  if (!image_is(parts.cb, mu_b, parts.pa)) return CheckOutcome::fail("mu_b: C_b -> P_a fails on " + t.to_string());
  std::vector<Word> rest;
  for (const auto& c : t.leaves()) {
    if (c.letters().find('a') != std::string::npos) rest.push_back(c);
  }
  if (rest.size() + 1 != t.leaves().size() || !image_is(rest, mu, t.internal())) {
    return CheckOutcome::fail("mu: C minus b^beta -> P fails on " + t.to_string());
  }
  return CheckOutcome::pass();
}

CheckOutcome maximal_prefix_code(const CodeTree& t) {
  std::size_t depth = 0;
  for (const auto& c : t.leaves()) depth = std::max(depth, c.length());
  for (const auto& w : words_up_to(depth + 1)) {
    bool covered = false;
    for (const auto& c : t.leaves()) {
      if (c.is_prefix_of(w) || w.is_proper_prefix_of(c)) {
        covered = true;
        break;
      }
    }
    if (!covered) return CheckOutcome::fail(w.to_string() + " escapes " + t.to_string());
  }
  return CheckOutcome::pass();
}

}  // namespace

CheckOutcome check_trees(int max_n) {
  mpz_class catalan = 1;
  for (int n = 0; n <= max_n; ++n) {
    if (n > 0) catalan = catalan * 2 * (2 * n - 1) / (n + 1);
    const auto trees = enumerate_trees(n);
    if (trees.size() != catalan) return CheckOutcome::fail("tree count " + std::to_string(trees.size()) + at_n(n));
    for (const auto& t : trees) {
      if (auto out = maximal_prefix_code(t); !out) return out;
      if (n == 0) continue;
      if (!lemma3_check(t)) return CheckOutcome::fail("M identity fails on " + t.to_string());
      if (!phi_is_bijective(t)) return CheckOutcome::fail("phi is not bijective on " + t.to_string());
      const TreeSignature sig = signature(t);
      if (!(reconstruct(sig) == t)) return CheckOutcome::fail("reconstruct(signature) != " + t.to_string());
      if (!(signature(reconstruct(sig)) == sig)) return CheckOutcome::fail("signature round trip on " + t.to_string());
      if (auto out = mu_bijections(t); !out) return out;
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome check_order_lemmas(int max_len) { return order_lemmas_check(max_len); }

CheckOutcome check_twisted_total_order(std::size_t max_len) {
  std::vector<ExtendedWord> xs;
  for (const auto& w : words_up_to(max_len)) xs.emplace_back(w);
  xs.push_back(ExtendedWord::a_inverse());
  for (const auto& u : xs) {
    for (const auto& v : xs) {
      const auto uv = twisted_compare(u, v);
      const auto vu = twisted_compare(v, u);
      const bool same = u.to_string() == v.to_string();
      if ((uv == 0) != same || (uv < 0) != (vu > 0)) {
        return CheckOutcome::fail("antisymmetry fails for " + u.to_string() + ", " + v.to_string());
      }
      if (uv >= 0) continue;
      for (const auto& w : xs) {
        if (twisted_less(v, w) && !twisted_less(u, w)) {
          return CheckOutcome::fail("transitivity fails for " + u.to_string() + " < " + v.to_string() + " < " +
                                    w.to_string());
        }
      }
    }
  }
  return CheckOutcome::pass();
}

// ---- congruence -------------------------------------------------------------

CheckOutcome check_regular_counts(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const std::size_t indec = all_indecomposables(n + 1).size();
    std::size_t regular = 0;
    enumerate_regular(n, [&](const RightCongruence&) { ++regular; });
    const mpz_class hall = hall_count(n);
    if (indec != regular || hall != static_cast<unsigned long>(regular)) {
      return CheckOutcome::fail("|Indec| = " + std::to_string(indec) + ", regular = " + std::to_string(regular) +
                                ", Hall = " + hall.get_str() + at_n(n));
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome check_enumeration_oracle(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    std::set<std::string> fast;
    for (const auto& rc : all_regular(n)) fast.insert(rc.to_text());
    std::set<std::string> slow;
    for (const auto& rc : all_regular_brute_force(n)) slow.insert(rc.to_text());
    if (fast != slow) return CheckOutcome::fail("backtracking and exhaustive enumeration differ" + at_n(n));
  }
  return CheckOutcome::pass();
}

namespace {

CheckOutcome congruence_shape(const RightCongruence& rc, const Permutation& theta) {
  const CodeTree& t = rc.tree();
  const TreeParts parts = tree_parts(t);
  const std::set<Word> pa(parts.pa.begin(), parts.pa.end());
  const std::set<Word> pb(parts.pb.begin(), parts.pb.end());
  for (const auto& c : parts.ca) {
    if (rc.f(c) != mu_a(c) || !pb.contains(rc.f(c))) return CheckOutcome::fail("f != mu_a at " + c.to_string());
  }
  for (const auto& c : parts.cb) {
    if (!pa.contains(rc.f(c))) return CheckOutcome::fail("f(" + c.to_string() + ") is not in P_a");
  }
  if (!is_indecomposable_lr(theta)) return CheckOutcome::fail(theta.to_string() + " fails the LR-maxima criterion");
  const TreeSignature sig = signature(t);
  const TreeStats st = tree_stats(t);
  const LRMaxima m = lr_maxima(theta);
  if (m.positions != sig.ranks) return CheckOutcome::fail("LR-maxima positions of " + theta.to_string());
  std::int64_t sum_i = 0;
  std::int64_t sum_s = 0;
  for (std::size_t h = 0; h < st.s.size(); ++h) {
    if (m.values[h] != st.s[h] + 1) return CheckOutcome::fail("j_h != s_h + 1 for " + theta.to_string());
    sum_i += sig.ranks[h];
    sum_s += st.s[h];
  }
  const std::int64_t n = t.n();
  const std::int64_t k = st.k;
  const std::int64_t rhs =
      hook_union_size(strip_lr_maxima(theta)) + (n + 1) * k - k * (k - 1) / 2 - sum_i + sum_s;
  if (hook_union_size(theta) != rhs) return CheckOutcome::fail("p(theta) relation fails for " + theta.to_string());
  return CheckOutcome::pass();
}

}  // namespace

CheckOutcome check_bijection(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    std::set<Permutation> image;
    CheckOutcome out;
    enumerate_regular(n, [&](const RightCongruence& rc) {
      if (!out) return;
      const Permutation theta = to_indecomposable(rc);
      if (!image.insert(theta).second) {
        out = CheckOutcome::fail("collision at " + theta.to_string());
        return;
      }
      if (from_indecomposable(theta).to_text() != rc.to_text()) {
        out = CheckOutcome::fail("from(to(rc)) != rc for theta=" + theta.to_string());
        return;
      }
      out = congruence_shape(rc, theta);
    });
    if (!out) return out;
    const auto indec = all_indecomposables(n + 1);
    if (std::set<Permutation>(indec.begin(), indec.end()) != image) {
      return CheckOutcome::fail("image is not Indec_(n+1)" + at_n(n));
    }
    for (const auto& theta : indec) {
      if (to_indecomposable(from_indecomposable(theta)) != theta) {
        return CheckOutcome::fail("to(from(theta)) != theta at " + theta.to_string());
      }
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome check_subgroups(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const auto all = all_regular(n);
    std::vector<std::vector<GroupWord>> gens;
    for (const auto& rc : all) {
      auto g = subgroup_generators(rc);
      // a subgroup of index n in F_2 is free of rank n + 1
      if (g.size() != static_cast<std::size_t>(n + 1)) {
        return CheckOutcome::fail(std::to_string(g.size()) + " generators for index " + std::to_string(n));
      }
      for (const auto& w : g) {
        if (w.empty() || free_reduce(w) != w || !subgroup_contains(rc, w)) {
          return CheckOutcome::fail("generator " + w + " of " + to_indecomposable(rc).to_string());
        }
      }
      gens.push_back(std::move(g));
    }
    if (all.size() > 500) continue;
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i == j) continue;
        const bool inside = std::all_of(gens[i].begin(), gens[i].end(),
                                        [&](const GroupWord& w) { return subgroup_contains(all[j], w); });
        // equal index and containment would force equality
        if (inside) return CheckOutcome::fail("two congruences give the same subgroup" + at_n(n));
      }
    }
  }
  return CheckOutcome::pass();
}

// ---- haglund ----------------------------------------------------------------

CheckOutcome check_haglund(int max_parts, const std::vector<std::uint32_t>& primes, int brute_max_parts) {
  if (auto out = H_equivalence_check(max_parts, primes, brute_max_parts); !out) return out;
  for (int n = 0; n <= max_parts; ++n) {
    for (const auto& lambda : partitions_with_parts(n)) {
      const LaurentPoly h = H_product(lambda);
      if (h.is_zero()) continue;
      std::int64_t degree = binomial2(n);
      for (int i = 1; i <= n; ++i) degree += lambda[i] + 1 - i;
      if (h.degree() != degree) return CheckOutcome::fail("degree of H at (" + lambda.to_string() + ")");
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome check_haglund_recursion(int max_parts) {
  for (int n = 2; n <= max_parts; ++n) {
    for (const auto& lambda : partitions_with_parts(n)) {
      bool staircase = true;
      for (int i = 1; i <= n; ++i) staircase = staircase && lambda[i] >= i;
      if (!staircase) continue;
      std::vector<int> rest;
      for (int i = 2; i <= n; ++i) rest.push_back(lambda[i] - 1);
      const LaurentPoly rhs =
          (LaurentPoly::monomial(lambda[1]) - 1) * LaurentPoly::monomial(n - 1) * H_hooksum(Partition(rest));
      if (H_hooksum(lambda) != rhs) return CheckOutcome::fail("recursion fails at (" + lambda.to_string() + ")");
    }
  }
  return CheckOutcome::pass();
}

// ---- ideals -----------------------------------------------------------------

CheckOutcome check_three_routes(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const LaurentPoly f = A_formula(n);
    if (A_formula_p(n) != f) return CheckOutcome::fail("inv and p forms of the formula differ" + at_n(n));
    const IdealCountReport structural = A_structural(n);
    if (std::get<LaurentPoly>(structural.total) != f) {
      return CheckOutcome::fail("structural sum " + to_string(structural.total) + " != " + f.to_string() + at_n(n));
    }
    if (!structural.breakdown_consistent()) return CheckOutcome::fail("per-tree terms do not add up" + at_n(n));
  }
  return CheckOutcome::pass();
}

CheckOutcome check_formula_shape(int max_n, const std::vector<std::uint32_t>& primes) {
  for (int n = 1; n <= max_n; ++n) {
    const LaurentPoly f = A_formula(n);
    if (!f.is_polynomial() || f.leading_coefficient() != 1) return CheckOutcome::fail("shape of A" + at_n(n));
    std::int64_t max_inv = 0;
    enumerate_indecomposables(n + 1, [&](const Permutation& s) { max_inv = std::max(max_inv, inversions(s)); });
    if (max_inv != binomial2(n + 1)) return CheckOutcome::fail("max inv over Indec" + at_n(n));
    if (f.degree() != (n + 1) * (n - 2) / 2 + (n + 1) + max_inv) return CheckOutcome::fail("degree of A" + at_n(n));
    LaurentPoly g = f;
    for (int i = 0; i <= n; ++i) {
      if (!g.divisible_by_q_minus_one()) return CheckOutcome::fail("(q-1)^(n+1) does not divide A" + at_n(n));
      g = g.divide_by_q_minus_one();
    }
    for (std::uint32_t p : primes) {
      if (f.eval_integer(p) <= 0) return CheckOutcome::fail("A is not a positive count at p=" + std::to_string(p));
    }
  }
  return CheckOutcome::pass();
}

std::vector<std::pair<int, std::uint32_t>> affordable_pairs(int max_n, const std::vector<std::uint32_t>& primes,
                                                            std::uint64_t work_cap, bool joint) {
  std::vector<std::pair<int, std::uint32_t>> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto trees = enumerate_trees(n);
    for (std::uint32_t p : primes) {
      std::uint64_t work = 0;
      for (const auto& t : trees) {
        std::size_t slots = 0;
        for (const auto& s : CoefficientAssignment::slots_of(t)) {
          if (joint || t.leaves()[static_cast<std::size_t>(s.leaf)].ends_with('a')) ++slots;
        }
        std::uint64_t w = 1;
        for (std::size_t i = 0; i < slots && w <= work_cap; ++i) w *= p;
        work += w;
        if (work > work_cap) break;
      }
      if (work <= work_cap) out.emplace_back(n, p);
    }
  }
  return out;
}

CheckOutcome check_brute_force(const std::vector<std::pair<int, std::uint32_t>>& pairs, std::uint64_t budget) {
  for (const auto& [n, p] : pairs) {
    const IdealCountReport brute = brute_force_A(n, p, budget);
    const mpz_class expected = A_formula(n).eval_integer(p);
    if (std::get<mpz_class>(brute.total) != expected) {
      return CheckOutcome::fail("brute force " + to_string(brute.total) + " != formula " + expected.get_str() + " at " +
                                pair_label(n, p));
    }
    if (!brute.breakdown_consistent()) return CheckOutcome::fail("per-tree counts do not add up at " + pair_label(n, p));
    const IdealCountReport structural = A_structural(n);
    for (std::size_t i = 0; i < brute.trees.size(); ++i) {
      const mpz_class predicted = std::get<LaurentPoly>(structural.trees[i].contribution).eval_integer(p);
      if (std::get<mpz_class>(brute.trees[i].contribution) != predicted) {
        return CheckOutcome::fail("tree " + std::to_string(i + 1) + " counts " +
                                  to_string(brute.trees[i].contribution) + ", expected " + predicted.get_str() + " at " +
                                  pair_label(n, p));
      }
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome check_mu_a_leg(const std::vector<std::pair<int, std::uint32_t>>& pairs, std::uint64_t budget) {
  for (const auto& [n, p] : pairs) {
    for (const auto& t : enumerate_trees(n)) {
      const TreeStats st = tree_stats(t);
      const mpz_class expected =
          q_minus_one_pow(static_cast<unsigned>(st.k)).shifted(st.N).eval_integer(p);
      const mpz_class got = mu_a_count(t, p, budget);
      if (got != expected) {
        return CheckOutcome::fail("mu(a) count " + got.get_str() + " != " + expected.get_str() + " on " + t.to_string() +
                                  " at " + pair_label(n, p));
      }
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome check_pair_counts(const std::vector<std::pair<int, std::uint32_t>>& pairs, std::uint64_t budget) {
  for (const auto& [n, p] : pairs) {
    if (auto out = per_tree_pair_count_check(n, p, budget); !out) return out;
  }
  return CheckOutcome::pass();
}

CheckOutcome check_cells(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const CellDecomposition dec = cell_decomposition(n);
    if (dec.cells.size() != all_indecomposables(n + 1).size()) return CheckOutcome::fail("cell count" + at_n(n));
    if (dec.polynomial() != A_formula(n)) return CheckOutcome::fail("cells do not sum to A" + at_n(n));
  }
  return CheckOutcome::pass();
}

// ---- runner -----------------------------------------------------------------

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"all", "permstat", "words", "congruence", "haglund", "ideals"};
  return names;
}

namespace {

struct PlannedCheck {
  std::string suite;
  std::string name;
  std::function<CheckOutcome()> run;
};

std::string describe_pairs(const std::vector<std::pair<int, std::uint32_t>>& pairs) {
  if (pairs.empty()) return "none affordable";
  std::string out;
  for (const auto& [n, p] : pairs) out += (out.empty() ? "" : " ") + pair_label(n, p);
  return out;
}

std::string primes_label(const std::vector<std::uint32_t>& primes) {
  std::string out;
  for (auto p : primes) out += (out.empty() ? "" : ",") + std::to_string(p);
  return "{" + out + "}";
}

std::vector<PlannedCheck> plan(const VerifyOptions& o) {
  const int n = o.max_n;
  const bool all = o.suite == "all";
  std::vector<PlannedCheck> checks;
  auto add = [&](const std::string& suite, std::string name, std::function<CheckOutcome()> run) {
    if (all || o.suite == suite) checks.push_back({suite, std::move(name), std::move(run)});
  };
  const std::string upto = "n<=" + std::to_string(n);
  const std::string upto1 = "n<=" + std::to_string(n + 1);

  const auto seed = o.seed;
  add("permstat", "polynomial ring axioms, 1000 samples, seed " + std::to_string(seed),
      [=] { return check_polynomial_axioms(seed, 1000); });
  add("permstat", "hook union identities, S_" + upto1, [=] { return check_hook_identities(n + 1); });
  add("permstat", "indecomposability criteria, S_" + upto1, [=] { return check_indecomposable_criteria(n + 1); });
  add("permstat", "p(theta) decomposition, S_" + upto1, [=] { return check_ptheta(n + 1); });
  add("permstat", "unique factorization, S_" + upto1, [=] { return check_unique_factorization(n + 1); });
  add("permstat", "q-factorial, S_" + upto1, [=] { return check_q_factorial(n + 1); });
  add("permstat", "generating series to order " + std::to_string(n + 3),
      [=] { return check_series(static_cast<unsigned>(n + 3)); });

  const int order_len = std::min(n, 7);
  const auto twisted_len = static_cast<std::size_t>(std::min(n, 5));
  add("words", "trees: M identity, phi, signatures, mu maps, " + upto, [=] { return check_trees(n); });
  add("words", "order lemmas, length<=" + std::to_string(order_len), [=] { return check_order_lemmas(order_len); });
  add("words", "twisted order is total, length<=" + std::to_string(twisted_len),
      [=] { return check_twisted_total_order(twisted_len); });

  const int oracle_n = std::min(n, 5);
  add("congruence", "Indec / regular / Hall counts, " + upto, [=] { return check_regular_counts(n); });
  add("congruence", "exhaustive enumeration oracle, n<=" + std::to_string(oracle_n),
      [=] { return check_enumeration_oracle(oracle_n); });
  add("congruence", "bijection round trips, " + upto, [=] { return check_bijection(n); });
  add("congruence", "subgroup generators, " + upto, [=] { return check_subgroups(n); });

  const auto primes = o.primes;
  const int brute_parts = std::min(n, 3);
  add("haglund", "product = hook sum = brute force at " + primes_label(primes) + ", parts<=" + std::to_string(n),
      [=] { return check_haglund(n, primes, brute_parts); });
  add("haglund", "recursion, parts<=" + std::to_string(n), [=] { return check_haglund_recursion(n); });

  if (all || o.suite == "ideals") {
    const auto joint = affordable_pairs(n, primes, o.work_cap, true);
    const auto leg = affordable_pairs(n, primes, o.work_cap, false);
    const auto budget = o.budget;
    add("ideals", "formula = p-form = structural, " + upto, [=] { return check_three_routes(n); });
    add("ideals", "formula shape, " + upto, [=] { return check_formula_shape(n, primes); });
    add("ideals", "brute force " + describe_pairs(joint), [=] { return check_brute_force(joint, budget); });
    add("ideals", "mu(a) leg " + describe_pairs(leg), [=] { return check_mu_a_leg(leg, budget); });
    add("ideals", "pair counts factor " + describe_pairs(joint), [=] { return check_pair_counts(joint, budget); });
    add("ideals", "cell decomposition, " + upto, [=] { return check_cells(n); });
  }
  return checks;
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  const auto& names = verify_suites();
  if (std::find(names.begin(), names.end(), options.suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + options.suite + "'");
  }
  if (options.max_n < 1) throw std::invalid_argument("max-n must be at least 1");
  for (auto p : options.primes) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  const auto checks = plan(options);
  std::vector<CheckResult> results(checks.size());
  parallel_for(checks.size(), [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    CheckOutcome outcome;
    try {
      outcome = checks[i].run();
    } catch (const std::exception& e) {
      outcome = CheckOutcome::fail(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    results[i] = {checks[i].suite, checks[i].name, std::move(outcome), elapsed.count()};
  });
  return results;
}

}  // namespace census
