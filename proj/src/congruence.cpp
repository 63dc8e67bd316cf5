#include "census/congruence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "census/errors.hpp"

namespace census {

RightCongruence::RightCongruence(CodeTree tree, std::vector<Word> images)
    : tree_(std::move(tree)), images_(std::move(images)) {
  if (tree_.is_trivial()) throw InvalidCongruence("C = {1} leaves no room for f: C -> P");
  if (images_.size() != tree_.leaves().size()) throw InvalidCongruence("f must be given on every leaf");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Word& c = tree_.leaves()[i];
    if (!tree_.is_internal(images_[i])) {
      throw InvalidCongruence("f(" + c.to_string() + ") = " + images_[i].to_string() + " is not in P");
    }
    if (!(images_[i] < c)) {
      throw InvalidCongruence("f(" + c.to_string() + ") = " + images_[i].to_string() + " is not below it");
    }
  }
}

const Word& RightCongruence::f(const Word& c) const {
  const int i = tree_.leaf_index(c);
  if (i < 0) throw InvalidCongruence(c.to_string() + " is not a leaf");
  return images_[static_cast<std::size_t>(i)];
}

std::string RightCongruence::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    os << tree_.leaves()[i].to_power_string() << " -> " << images_[i].to_power_string() << "\n";
  }
  return os.str();
}

RightCongruence RightCongruence::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<Word, Word>> rows;
  while (std::getline(in, line)) {
    std::erase_if(line, [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; });
    if (line.empty() || line[0] == '#') continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw InvalidCongruence("expected 'c -> f(c)', got '" + line + "'");
    rows.emplace_back(Word::parse(line.substr(0, arrow)), Word::parse(line.substr(arrow + 2)));
  }
  std::sort(rows.begin(), rows.end());
  std::vector<Word> leaves;
  std::vector<Word> images;
  for (auto& [c, fc] : rows) {
    leaves.push_back(c);
    images.push_back(fc);
  }
  try {
    return RightCongruence(CodeTree(std::move(leaves)), std::move(images));
  } catch (const InvalidTree& e) {
    throw InvalidCongruence(e.what());
  }
}

ActionTable action_table(const RightCongruence& rc) {
  const CodeTree& t = rc.tree();
  ActionTable table;
  table.states = t.internal();
  for (const auto& p : table.states) {
    for (char x : {'a', 'b'}) {
      const Word px = p.append(x);
      const Word target = t.is_internal(px) ? px : rc.f(px);
      (x == 'a' ? table.delta_a : table.delta_b).push_back(t.internal_index(target));
    }
  }
  return table;
}

namespace {

bool is_bijection(const std::vector<int>& map) {
  std::vector<bool> hit(map.size(), false);
  for (int v : map) {
    if (v < 0 || static_cast<std::size_t>(v) >= map.size() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

}  // namespace

bool is_regular(const RightCongruence& rc) {
  const ActionTable table = action_table(rc);
  return is_bijection(table.delta_a) && is_bijection(table.delta_b);
}

void enumerate_regular(int n, const std::function<void(const RightCongruence&)>& visit) {
  if (n < 1) return;
  for (const auto& tree : enumerate_trees(n)) {
    const TreeParts parts = tree_parts(tree);
    std::vector<Word> images(tree.leaves().size());
    std::vector<std::size_t> cb_slots;
    for (std::size_t i = 0; i < tree.leaves().size(); ++i) {
      const Word& c = tree.leaves()[i];
      if (c.ends_with('a')) {
        images[i] = mu_a(c);
      } else {
        cb_slots.push_back(i);
      }
    }
    std::vector<bool> used(parts.pa.size(), false);
    std::function<void(std::size_t)> place = [&](std::size_t slot) {
      if (slot == cb_slots.size()) {
        RightCongruence rc(tree, images);
        if (!is_regular(rc)) throw std::logic_error("enumerated congruence is not regular: " + rc.to_text());
        visit(rc);
        return;
      }
      const std::size_t leaf = cb_slots[slot];
      for (std::size_t j = 0; j < parts.pa.size(); ++j) {
        if (used[j] || !(parts.pa[j] < tree.leaves()[leaf])) continue;
        used[j] = true;
        images[leaf] = parts.pa[j];
        place(slot + 1);
        used[j] = false;
      }
    };
    place(0);
  }
}

std::vector<RightCongruence> all_regular(int n) {
  std::vector<RightCongruence> out;
  enumerate_regular(n, [&](const RightCongruence& rc) { out.push_back(rc); });
  return out;
}

std::vector<RightCongruence> all_regular_brute_force(int n) {
  std::vector<RightCongruence> out;
  if (n < 1) return out;
  for (const auto& tree : enumerate_trees(n)) {
    const auto& leaves = tree.leaves();
    std::vector<std::vector<Word>> choices;
    for (const auto& c : leaves) {
      std::vector<Word> below;
      for (const auto& p : tree.internal())
        if (p < c) below.push_back(p);
      choices.push_back(std::move(below));
    }
    std::vector<std::size_t> digit(leaves.size(), 0);
    while (true) {
      std::vector<Word> images;
      for (std::size_t i = 0; i < leaves.size(); ++i) images.push_back(choices[i][digit[i]]);
      RightCongruence rc(tree, std::move(images));
      if (is_regular(rc)) out.push_back(std::move(rc));
      std::size_t i = 0;
      while (i < digit.size() && ++digit[i] == choices[i].size()) digit[i++] = 0;
      if (i == digit.size()) break;
    }
  }
  return out;
}

std::vector<ExtendedWord> extended_prefix_set(const CodeTree& t) {
  std::vector<ExtendedWord> out(t.internal().begin(), t.internal().end());
  out.push_back(ExtendedWord::a_inverse());
  std::sort(out.begin(), out.end(), twisted_less);
  return out;
}

Permutation to_indecomposable(const RightCongruence& rc) {
  if (!is_regular(rc)) throw NotRegular("congruence is not regular");
  const CodeTree& t = rc.tree();
  const auto p_tilde = extended_prefix_set(t);
  std::vector<int> image;
  for (std::size_t i = 0; i < t.leaves().size(); ++i) {
    const Word& c = t.leaves()[i];
    // phi = f, except that the leaf in a* goes to a^-1
    const ExtendedWord target = (!c.contains_b()) ? ExtendedWord::a_inverse() : ExtendedWord(rc.images()[i]);
    const auto it = std::find(p_tilde.begin(), p_tilde.end(), target);
    image.push_back(static_cast<int>(it - p_tilde.begin()) + 1);
  }
  return Permutation(std::move(image));
}

RightCongruence from_indecomposable(const Permutation& theta) {
  if (theta.size() < 2) throw NotIndecomposable("need a permutation of S_(n+1) with n >= 1");
  if (!is_indecomposable(theta)) throw NotIndecomposable(theta.to_string() + " is decomposable");
  const LRMaxima lr = lr_maxima(theta);
  TreeSignature sig;
  sig.n = theta.size() - 1;
  sig.ranks = lr.positions;
  for (std::size_t h = 0; h < lr.values.size(); ++h) {
    sig.lengths.push_back(h == 0 ? lr.values[0] - 1 : lr.values[h] - lr.values[h - 1]);
  }
  CodeTree tree = reconstruct(sig);
  const TreeParts parts = tree_parts(tree);
  std::vector<Word> pa_twisted = parts.pa;
  std::sort(pa_twisted.begin(), pa_twisted.end(),
            [](const Word& x, const Word& y) { return twisted_less(x, y); });
  const Permutation sigma = strip_lr_maxima(theta);
  if (static_cast<std::size_t>(sigma.size()) != parts.cb.size()) {
    throw std::logic_error("remainder size does not match |C_b|");
  }
  std::vector<Word> images;
  std::size_t b_rank = 0;
  for (const auto& c : tree.leaves()) {
    if (c.ends_with('a')) {
      images.push_back(mu_a(c));
    } else {
      images.push_back(pa_twisted[static_cast<std::size_t>(sigma(static_cast<int>(++b_rank)) - 1)]);
    }
  }
  RightCongruence rc(std::move(tree), std::move(images));
  if (!is_regular(rc)) throw std::logic_error("reconstructed congruence is not regular");
  return rc;
}

GroupWord group_inverse(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (char& ch : out) {
    switch (ch) {
      case 'a': ch = 'A'; break;
      case 'b': ch = 'B'; break;
      case 'A': ch = 'a'; break;
      case 'B': ch = 'b'; break;
      default: throw InvalidWord("group letter '" + std::string(1, ch) + "'");
    }
  }
  return out;
}

GroupWord free_reduce(const GroupWord& w) {
  auto inverse_pair = [](char x, char y) { return x != y && (x ^ 0x20) == y; };
  GroupWord out;
  for (char ch : w) {
    if (!out.empty() && inverse_pair(out.back(), ch)) {
      out.pop_back();
    } else {
      out.push_back(ch);
    }
  }
  return out;
}

std::vector<GroupWord> subgroup_generators(const RightCongruence& rc) {
  if (!is_regular(rc)) throw NotRegular("generators are defined for regular congruences");
  std::vector<GroupWord> gens;
  for (std::size_t i = 0; i < rc.images().size(); ++i) {
    gens.push_back(free_reduce(rc.tree().leaves()[i].letters() + group_inverse(rc.images()[i].letters())));
  }
  return gens;
}

bool subgroup_contains(const RightCongruence& rc, const GroupWord& w) {
  if (!is_regular(rc)) throw NotRegular("membership needs a regular congruence");
  const ActionTable table = action_table(rc);
  auto invert = [](const std::vector<int>& map) {
    std::vector<int> inv(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) inv[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
    return inv;
  };
  const auto inv_a = invert(table.delta_a);
  const auto inv_b = invert(table.delta_b);
  int state = 0;  // the class of the empty word
  for (char ch : w) {
    const auto s = static_cast<std::size_t>(state);
    switch (ch) {
      case 'a': state = table.delta_a[s]; break;
      case 'b': state = table.delta_b[s]; break;
      case 'A': state = inv_a[s]; break;
      case 'B': state = inv_b[s]; break;
      default: throw InvalidWord("group letter '" + std::string(1, ch) + "'");
    }
  }
  return state == 0;
}

mpz_class hall_count(int n) {
  if (n < 1) throw std::invalid_argument("hall_count needs n >= 1");
  std::vector<mpz_class> fact(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * i;
  std::vector<mpz_class> count(static_cast<std::size_t>(n) + 1, 0);
  for (int m = 1; m <= n; ++m) {
    mpz_class value = m * fact[static_cast<std::size_t>(m)];
    for (int i = 1; i < m; ++i) value -= fact[static_cast<std::size_t>(m - i)] * count[static_cast<std::size_t>(i)];
    count[static_cast<std::size_t>(m)] = value;
  }
  return count[static_cast<std::size_t>(n)];
}

}  // namespace census
