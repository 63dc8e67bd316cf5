#include "census/permstat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "census/errors.hpp"

namespace census {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  std::vector<bool> seen(image_.size() + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidPermutation("not a rearrangement of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> image;
  if (text.find(',') != std::string::npos) {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        image.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw InvalidPermutation("bad entry '" + item + "'");
      }
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw InvalidPermutation("bad digit in '" + text + "'");
      image.push_back(ch - '0');
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  const bool digits = size() <= 9;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (!digits && i > 0) os << ',';
    os << image_[i];
  }
  return os.str();
}

std::int64_t binomial2(std::int64_t n) { return n * (n - 1) / 2; }

std::int64_t inversions(const Permutation& s) {
  std::int64_t count = 0;
  for (int i = 1; i <= s.size(); ++i)
    for (int j = i + 1; j <= s.size(); ++j)
      if (s(i) > s(j)) ++count;
  return count;
}

std::int64_t versions(const Permutation& s) {
  std::int64_t count = 0;
  for (int i = 1; i <= s.size(); ++i)
    for (int j = i + 1; j <= s.size(); ++j)
      if (s(i) < s(j)) ++count;
  return count;
}

std::int64_t hook_union_size(const Permutation& s) {
  // The 1 of row i sits in column s(i). Its hook covers the cells left of it
  // in the row and the cells below it in the column.
  const int n = s.size();
  std::vector<char> marked(static_cast<std::size_t>(n * n), 0);
  auto cell = [n](int row, int col) { return static_cast<std::size_t>((row - 1) * n + (col - 1)); };
  for (int i = 1; i <= n; ++i) {
    for (int col = 1; col < s(i); ++col) marked[cell(i, col)] = 1;
    for (int row = i + 1; row <= n; ++row) marked[cell(row, s(i))] = 1;
  }
  return std::count(marked.begin(), marked.end(), 1);
}

std::int64_t p_via_inversions(const Permutation& s) { return 2 * inversions(s) + versions(s); }

bool is_indecomposable(const Permutation& s) {
  // {1..i} is stabilized iff max(s(1..i)) == i.
  int running_max = 0;
  for (int i = 1; i < s.size(); ++i) {
    running_max = std::max(running_max, s(i));
    if (running_max == i) return false;
  }
  return true;
}

LRMaxima lr_maxima(const Permutation& s) {
  LRMaxima m;
  int best = 0;
  for (int i = 1; i <= s.size(); ++i) {
    if (s(i) > best) {
      best = s(i);
      m.positions.push_back(i);
      m.values.push_back(best);
    }
  }
  return m;
}

bool is_indecomposable_lr(const Permutation& s) {
  const LRMaxima m = lr_maxima(s);
  for (int h = 0; h + 1 < m.count(); ++h) {
    if (m.values[static_cast<std::size_t>(h)] < m.positions[static_cast<std::size_t>(h + 1)]) {
      return false;
    }
  }
  return true;
}

Permutation standardize(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DuplicateLetters("word has a repeated letter");
  }
  std::vector<int> image;
  image.reserve(word.size());
  for (int letter : word) {
    auto rank = std::lower_bound(sorted.begin(), sorted.end(), letter) - sorted.begin();
    image.push_back(static_cast<int>(rank) + 1);
  }
  return Permutation(std::move(image));
}

Permutation strip_lr_maxima(const Permutation& t) {
  const LRMaxima m = lr_maxima(t);
  std::vector<int> rest;
  std::size_t next = 0;
  for (int i = 1; i <= t.size(); ++i) {
    if (next < m.positions.size() && m.positions[next] == i) {
      ++next;
      continue;
    }
    rest.push_back(t(i));
  }
  return standardize(rest);
}

PThetaSides ptheta_sides(const Permutation& t) {
  const LRMaxima m = lr_maxima(t);
  const std::int64_t n = t.size();
  const std::int64_t k = m.count();
  std::int64_t rhs = hook_union_size(strip_lr_maxima(t)) + k * n - k * (k + 1) / 2;
  for (std::size_t h = 0; h < m.positions.size(); ++h) rhs += m.values[h] - m.positions[h];
  return {hook_union_size(t), rhs};
}

bool ptheta_identity_check(const Permutation& t) {
  const auto sides = ptheta_sides(t);
  return sides.lhs == sides.rhs;
}

Permutation shifted_concat(const Permutation& a, const Permutation& b) {
  std::vector<int> image = a.image();
  for (int v : b.image()) image.push_back(a.size() + v);
  return Permutation(std::move(image));
}

std::vector<Permutation> indecomposable_factors(const Permutation& s) {
  std::vector<Permutation> factors;
  int start = 1;
  int running_max = 0;
  for (int i = 1; i <= s.size(); ++i) {
    running_max = std::max(running_max, s(i));
    if (running_max == i) {
      std::vector<int> block;
      for (int j = start; j <= i; ++j) block.push_back(s(j) - (start - 1));
      factors.emplace_back(std::move(block));
      start = i + 1;
    }
  }
  return factors;
}

void enumerate_permutations(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  do {
    visit(Permutation(image));
  } while (std::next_permutation(image.begin(), image.end()));
}

void enumerate_indecomposables(int n, const std::function<void(const Permutation&)>& visit) {
  if (n == 0) return;
  enumerate_permutations(n, [&](const Permutation& s) {
    if (is_indecomposable(s)) visit(s);
  });
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  enumerate_permutations(n, [&](const Permutation& s) { out.push_back(s); });
  return out;
}

std::vector<Permutation> all_indecomposables(int n) {
  std::vector<Permutation> out;
  enumerate_indecomposables(n, [&](const Permutation& s) { out.push_back(s); });
  return out;
}

namespace {

LaurentPoly histogram_to_poly(const std::vector<unsigned long>& counts) {
  std::vector<mpz_class> coeffs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) coeffs[i] = counts[i];
  return LaurentPoly::from_dense(0, coeffs);
}

}  // namespace

LaurentPoly indec_inv_polynomial(int m) {
  std::vector<unsigned long> counts(static_cast<std::size_t>(binomial2(m) + 1), 0);
  enumerate_indecomposables(m, [&](const Permutation& s) { ++counts[static_cast<std::size_t>(inversions(s))]; });
  return histogram_to_poly(counts);
}

LaurentPoly indec_p_polynomial(int m) {
  std::vector<unsigned long> counts(static_cast<std::size_t>(2 * binomial2(m) + 1), 0);
  enumerate_indecomposables(m, [&](const Permutation& s) { ++counts[static_cast<std::size_t>(hook_union_size(s))]; });
  return histogram_to_poly(counts);
}

LaurentPoly inv_polynomial(int n) {
  std::vector<unsigned long> counts(static_cast<std::size_t>(binomial2(n) + 1), 0);
  enumerate_permutations(n, [&](const Permutation& s) { ++counts[static_cast<std::size_t>(inversions(s))]; });
  return histogram_to_poly(counts);
}

bool series_identity_check(unsigned order) {
  TruncatedSeries factorials(order);
  TruncatedSeries denominator(order);
  denominator.set(0, LaurentPoly(1));
  for (unsigned k = 0; k <= order; ++k) {
    factorials.set(k, q_factorial(k));
    if (k >= 1) denominator.set(k, -indec_inv_polynomial(static_cast<int>(k)));
  }
  return series_invert(denominator) == factorials;
}

}  // namespace census
