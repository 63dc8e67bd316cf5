#include "census/words.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "census/errors.hpp"

namespace census {

// ---- Word -----------------------------------------------------------------

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char ch : letters_) {
    if (ch != 'a' && ch != 'b') throw InvalidWord("letter '" + std::string(1, ch) + "'");
  }
}

Word Word::parse(std::string_view text) {
  if (text == "1" || text.empty()) return Word();
  std::string letters;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i++];
    if (ch != 'a' && ch != 'b') throw InvalidWord("cannot parse '" + std::string(text) + "'");
    std::size_t count = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) throw InvalidWord("missing exponent in '" + std::string(text) + "'");
      count = std::stoul(std::string(text.substr(start, i - start)));
    }
    letters.append(count, ch);
  }
  return Word(std::move(letters));
}

bool Word::is_prefix_of(const Word& w) const {
  return length() <= w.length() && std::equal(letters_.begin(), letters_.end(), w.letters_.begin());
}

Word Word::append(char x) const { return append(x, 1); }

Word Word::append(char x, std::size_t count) const {
  std::string letters = letters_;
  letters.append(count, x);
  return Word(std::move(letters));
}

Word Word::drop_back(std::size_t count) const {
  Word out;
  out.letters_ = letters_.substr(0, letters_.size() - std::min(count, letters_.size()));
  return out;
}

std::string Word::to_string() const { return letters_.empty() ? "1" : letters_; }

std::string Word::to_power_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    os << letters_[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::strong_ordering alph_compare(const Word& u, const Word& v) { return u <=> v; }

namespace {

Word strip_run(const Word& w, char x) {
  std::size_t run = 0;
  const auto& s = w.letters();
  while (run < s.size() && s[s.size() - 1 - run] == x) ++run;
  return w.drop_back(run);
}

}  // namespace

Word mu_a(const Word& w) { return strip_run(w, 'a'); }
Word mu_b(const Word& w) { return strip_run(w, 'b'); }

Word mu(const Word& w) {
  if (w.empty()) throw EmptyWord("mu(1) is undefined");
  return strip_run(w, w.back());
}

// ---- ExtendedWord / twisted order -----------------------------------------

std::string ExtendedWord::to_string() const { return is_a_inverse() ? "a^-1" : word_->to_string(); }
std::string ExtendedWord::to_power_string() const {
  return is_a_inverse() ? "a^-1" : word_->to_power_string();
}

std::strong_ordering twisted_compare(const ExtendedWord& u, const ExtendedWord& v) {
  if (u.is_a_inverse() && v.is_a_inverse()) return std::strong_ordering::equal;
  if (u.is_a_inverse()) return v.word().contains_b() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (v.is_a_inverse()) return u.word().contains_b() ? std::strong_ordering::greater : std::strong_ordering::less;
  const Word& x = u.word();
  const Word& y = v.word();
  if (mu_a(x) == mu_a(y)) return y <=> x;
  return x <=> y;
}

std::vector<Word> words_up_to(std::size_t max_len) {
  std::vector<Word> out{Word()};
  std::size_t layer_start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_start; i < layer_end; ++i) {
      out.push_back(out[i].append('a'));
      out.push_back(out[i].append('b'));
    }
    layer_start = layer_end;
  }
  return out;
}

// ---- CodeTree -------------------------------------------------------------

CodeTree::CodeTree() : leaves_{Word()} {}

CodeTree::CodeTree(std::vector<Word> leaves) : leaves_(std::move(leaves)) {
  if (leaves_.empty()) throw InvalidTree("empty leaf set");
  std::sort(leaves_.begin(), leaves_.end());
  if (std::adjacent_find(leaves_.begin(), leaves_.end()) != leaves_.end()) {
    throw InvalidTree("repeated leaf");
  }
  // In dictionary order a prefix of w precedes w and so does everything in
  // between, which then shares the prefix: adjacent pairs suffice.
  for (std::size_t i = 0; i + 1 < leaves_.size(); ++i) {
    if (leaves_[i].is_prefix_of(leaves_[i + 1])) {
      throw InvalidTree(leaves_[i].to_string() + " is a prefix of " + leaves_[i + 1].to_string());
    }
  }
  std::set<Word> prefixes;
  for (const auto& c : leaves_) {
    for (std::size_t len = 0; len < c.length(); ++len) prefixes.insert(Word(c.letters().substr(0, len)));
  }
  internal_.assign(prefixes.begin(), prefixes.end());
  for (const auto& p : internal_) {
    for (char x : {'a', 'b'}) {
      const Word child = p.append(x);
      if (!is_leaf(child) && !is_internal(child)) {
        throw InvalidTree("not maximal: " + child.to_string() + " is missing");
      }
    }
  }
}

bool CodeTree::is_leaf(const Word& w) const { return leaf_index(w) >= 0; }
bool CodeTree::is_internal(const Word& w) const { return internal_index(w) >= 0; }

int CodeTree::leaf_index(const Word& w) const {
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), w);
  return (it != leaves_.end() && *it == w) ? static_cast<int>(it - leaves_.begin()) : -1;
}

int CodeTree::internal_index(const Word& w) const {
  auto it = std::lower_bound(internal_.begin(), internal_.end(), w);
  return (it != internal_.end() && *it == w) ? static_cast<int>(it - internal_.begin()) : -1;
}

std::string CodeTree::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < leaves_.size(); ++i) os << (i ? "," : "") << leaves_[i].to_power_string();
  os << "}";
  return os.str();
}

namespace {

std::vector<std::vector<Word>> leaf_sets(int n, std::map<int, std::vector<std::vector<Word>>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<std::vector<Word>> out;
  if (n == 0) {
    out.push_back({Word()});
  } else {
    for (int left = 0; left < n; ++left) {
      const auto lefts = leaf_sets(left, memo);
      const auto rights = leaf_sets(n - 1 - left, memo);
      for (const auto& l : lefts) {
        for (const auto& r : rights) {
          std::vector<Word> leaves;
          leaves.reserve(l.size() + r.size());
          for (const auto& w : l) leaves.emplace_back("a" + w.letters());
          for (const auto& w : r) leaves.emplace_back("b" + w.letters());
          out.push_back(std::move(leaves));
        }
      }
    }
  }
  memo[n] = out;
  return out;
}

}  // namespace

std::vector<CodeTree> enumerate_trees(int n) {
  std::map<int, std::vector<std::vector<Word>>> memo;
  std::vector<CodeTree> trees;
  for (auto& leaves : leaf_sets(n, memo)) trees.emplace_back(std::move(leaves));
  return trees;
}

TreeParts tree_parts(const CodeTree& t) {
  TreeParts parts;
  if (t.is_trivial()) return parts;
  for (const auto& c : t.leaves()) (c.ends_with('a') ? parts.ca : parts.cb).push_back(c);
  for (const auto& p : t.internal()) {
    if (p.empty() || p.ends_with('a')) parts.pa.push_back(p);
    if (p.empty() || p.ends_with('b')) parts.pb.push_back(p);
  }
  return parts;
}

// ---- signatures -----------------------------------------------------------

TreeSignature signature(const CodeTree& t) {
  if (t.is_trivial()) throw TrivialTree("C = {1} has no signature");
  TreeSignature sig;
  sig.n = t.n();
  for (std::size_t i = 0; i < t.leaves().size(); ++i) {
    const Word& c = t.leaves()[i];
    if (!c.ends_with('a')) continue;
    sig.ranks.push_back(static_cast<int>(i) + 1);
    sig.lengths.push_back(static_cast<int>(c.length() - mu_a(c).length()));
  }
  return sig;
}

CodeTree reconstruct(const TreeSignature& sig) {
  const std::size_t k = sig.ranks.size();
  if (sig.n < 1) throw InvalidSignature("n must be at least 1");
  if (k == 0 || k != sig.lengths.size()) throw InvalidSignature("ranks and lengths must be nonempty and equal in size");
  if (sig.ranks.front() != 1) throw InvalidSignature("the first rank must be 1");
  for (std::size_t h = 0; h < k; ++h) {
    if (sig.lengths[h] < 1) throw InvalidSignature("branch lengths must be positive");
    if (h > 0 && sig.ranks[h] <= sig.ranks[h - 1]) throw InvalidSignature("ranks must increase");
  }
  const std::size_t leaf_count = static_cast<std::size_t>(sig.n) + 1;
  std::vector<Word> leaves;
  Word current = Word().append('a', static_cast<std::size_t>(sig.lengths[0]));
  leaves.push_back(current);
  std::size_t next_branch = 1;
  while (true) {
    const Word trimmed = mu_b(current);
    if (trimmed.empty()) break;  // current is in b*: last leaf
    if (leaves.size() == leaf_count) throw InvalidSignature("more leaves than n + 1");
    const Word flipped = trimmed.drop_back().append('b');
    const int rank = static_cast<int>(leaves.size()) + 1;
    if (next_branch < k && sig.ranks[next_branch] == rank) {
      current = flipped.append('a', static_cast<std::size_t>(sig.lengths[next_branch++]));
    } else {
      current = flipped;
    }
    leaves.push_back(current);
  }
  if (leaves.size() != leaf_count) throw InvalidSignature("scan ended after " + std::to_string(leaves.size()) + " leaves");
  if (next_branch != k) throw InvalidSignature("unused ranks remain");
  return CodeTree(std::move(leaves));
}

// ---- statistics -----------------------------------------------------------

TreeStats tree_stats(const CodeTree& t) {
  TreeStats st;
  const TreeParts parts = tree_parts(t);
  st.k = static_cast<int>(parts.ca.size());
  std::int64_t partial = 0;
  for (const auto& c : parts.ca) {
    partial += static_cast<std::int64_t>(c.length() - mu_a(c).length());
    st.s.push_back(partial);
    st.N += partial - 1;
  }
  for (const auto& p : parts.pb) {
    if (p.empty()) continue;
    for (const auto& c : parts.cb)
      if (p < c) ++st.M;
  }
  std::vector<int> lambda;
  for (const auto& c : parts.cb) {
    lambda.push_back(static_cast<int>(std::count_if(parts.pa.begin(), parts.pa.end(), [&](const Word& q) { return q < c; })));
  }
  st.lambda = Partition(std::move(lambda));
  return st;
}

bool lemma3_check(const CodeTree& t) {
  const std::int64_t n = t.n();
  std::int64_t k = 0;
  std::int64_t rank_sum = 0;
  for (std::size_t i = 0; i < t.leaves().size(); ++i) {
    if (!t.leaves()[i].ends_with('b')) {  // C~_a: every leaf not ending in b
      ++k;
      rank_sum += static_cast<std::int64_t>(i) + 1;
    }
  }
  const std::int64_t lhs = tree_stats(t).M + rank_sum;
  const std::int64_t rhs = (n + 1) * (k - 1) + k - k * (k - 1) / 2;
  return lhs == rhs;
}

// ---- the map phi ----------------------------------------------------------

namespace {

std::vector<Word> c_tilde_a(const CodeTree& t) {
  std::vector<Word> out;
  for (const auto& c : t.leaves())
    if (!c.ends_with('b')) out.push_back(c);
  return out;
}

bool in_a_plus(const Word& w) { return !w.empty() && !w.contains_b(); }

}  // namespace

std::vector<PhiEntry> phi_bijection(const CodeTree& t) {
  std::vector<PhiEntry> map;
  const auto gammas = c_tilde_a(t);
  for (const auto& c : t.leaves()) {
    for (const auto& gamma : gammas) {
      if (!(c > gamma)) continue;
      PhiTarget target;
      if (c.ends_with('b')) {
        if (in_a_plus(gamma)) {
          target = {3, c, Word()};
        } else {
          target = {2, mu_a(gamma), c};
        }
      } else {
        target = {4, gamma, c};
      }
      map.push_back({{c, gamma}, std::move(target)});
    }
  }
  return map;
}

std::vector<PhiTarget> phi_codomain(const CodeTree& t) {
  std::vector<PhiTarget> out;
  const TreeParts parts = tree_parts(t);
  for (const auto& p : parts.pb) {
    if (p.empty()) continue;
    for (const auto& c : parts.cb)
      if (p < c) out.push_back({2, p, c});
  }
  for (const auto& c : parts.cb) out.push_back({3, c, Word()});
  const auto tilde = c_tilde_a(t);
  for (const auto& x : tilde)
    for (const auto& y : tilde)
      if (x < y) out.push_back({4, x, y});
  return out;
}

bool phi_is_bijective(const CodeTree& t) {
  std::vector<PhiTarget> image;
  for (auto& entry : phi_bijection(t)) image.push_back(std::move(entry.target));
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
  auto codomain = phi_codomain(t);
  std::sort(codomain.begin(), codomain.end());
  return image == codomain;
}

// ---- order lemmas ---------------------------------------------------------

CheckOutcome prefix_order_check(std::size_t max_len) {
  const auto words = words_up_to(max_len);
  for (const auto& p : words) {
    for (const auto& q : words) {
      if (q < p) continue;
      for (std::size_t i = 0; i <= max_len; ++i) {
        const Word left = p.append('a', i);
        for (std::size_t j = 1; j <= max_len; ++j) {
          const Word right = q.append('b', j);
          if (!(left < right)) {
            return CheckOutcome::fail("prefix order: " + left.to_string() + " !< " + right.to_string());
          }
        }
      }
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome class_interval_check(std::size_t max_len) {
  auto words = words_up_to(max_len);
  std::sort(words.begin(), words.end());
  std::map<Word, std::pair<std::size_t, std::size_t>> span;  // class -> (first, count)
  std::map<Word, std::size_t> last;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Word key = mu_a(words[i]);
    auto [it, fresh] = span.try_emplace(key, i, 0);
    ++it->second.second;
    last[key] = i;
  }
  for (const auto& [key, fc] : span) {
    if (last[key] - fc.first + 1 != fc.second) {
      return CheckOutcome::fail("class " + key.to_string() + "a* is not an interval");
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome twisted_class_check(std::size_t max_len) {
  const auto words = words_up_to(max_len);
  for (const auto& u : words) {
    for (const auto& v : words) {
      const auto alph = u <=> v;
      const auto twist = twisted_compare(u, v);
      const bool same_class = mu_a(u) == mu_a(v);
      const std::string pair = u.to_string() + ", " + v.to_string();
      if (same_class) {
        if (twist != (v <=> u)) return CheckOutcome::fail("twisted vs reversed order at " + pair);
      } else {
        if (twist != alph) return CheckOutcome::fail("twisted vs alphabetical order at " + pair);
        if (alph != (mu_a(u) <=> mu_a(v))) return CheckOutcome::fail("mu_a order dependence at " + pair);
      }
      if (u.ends_with('a') && v.ends_with('a') && u < v) {
        const Word mu_u = mu(u);
        const Word mu_v = mu(v);
        if (!(mu_u == mu_v || (mu_u < mu_v && twisted_less(mu_u, mu_v)))) {
          return CheckOutcome::fail("cross-class order at " + pair);
        }
      }
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome lower_bound_check(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      const auto& c_list = t.leaves();
      for (std::size_t ci = 0; ci < c_list.size(); ++ci) {
        // largest a-ending leaf <= c; c_1 = a^l always qualifies
        std::size_t lower = ci;
        while (!c_list[lower].ends_with('a')) --lower;
        const Word bound = mu(c_list[lower]);
        for (std::size_t di = 0; di <= ci; ++di) {
          if (twisted_compare(mu(c_list[di]), bound) > 0) {
            return CheckOutcome::fail("largest lower bound on " + t.to_string() + " at c=" + c_list[ci].to_string() +
                                      ", d=" + c_list[di].to_string());
          }
        }
      }
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome order_lemmas_check(int n) {
  const auto len = static_cast<std::size_t>(n);
  for (auto outcome : {prefix_order_check(len), class_interval_check(len), twisted_class_check(len), lower_bound_check(n)}) {
    if (!outcome) return outcome;
  }
  return CheckOutcome::pass();
}

}  // namespace census
