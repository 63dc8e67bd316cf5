#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "census/check.hpp"
#include "census/partition.hpp"

namespace census {

/**
 * A word over the ordered alphabet a < b. The default value is the empty
 * word, written "1". Comparison operators implement the alphabetical
 * (dictionary) order: a proper prefix is smaller, otherwise the first
 * differing letter decides.
 */
class Word {
 public:
  Word() = default;
  /// Throws InvalidWord on letters other than 'a' and 'b'.
  explicit Word(std::string letters);
  /// Accepts "1", plain letters "aab" and powers "a^2b" (mixable).
  static Word parse(std::string_view text);

  const std::string& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char back() const { return letters_.back(); }
  bool ends_with(char x) const { return !letters_.empty() && letters_.back() == x; }
  bool contains_b() const { return letters_.find('b') != std::string::npos; }
  /// Prefix, not necessarily proper.
  bool is_prefix_of(const Word& w) const;
  bool is_proper_prefix_of(const Word& w) const { return length() < w.length() && is_prefix_of(w); }

  Word append(char x) const;
  Word append(char x, std::size_t count) const;
  /// Drops the last `count` letters.
  Word drop_back(std::size_t count = 1) const;

  /// "1" or plain letters, e.g. "baa".
  std::string to_string() const;
  /// Run-length form, e.g. "ba^2".
  std::string to_power_string() const;

  friend std::strong_ordering operator<=>(const Word& u, const Word& v) { return u.letters_ <=> v.letters_; }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

/// Alphabetical order as a three-way comparison.
std::strong_ordering alph_compare(const Word& u, const Word& v);

/// Strips the maximal trailing run of a (resp. b). Total.
Word mu_a(const Word& w);
Word mu_b(const Word& w);
/// Strips the maximal trailing run of the last letter. Throws EmptyWord on 1.
Word mu(const Word& w);

/// A word, or the formal inverse a^-1 used to extend the prefix set.
class ExtendedWord {
 public:
  ExtendedWord(Word w) : word_(std::move(w)) {}  // NOLINT: words embed
  static ExtendedWord a_inverse() { return ExtendedWord(); }

  bool is_a_inverse() const { return !word_.has_value(); }
  /// Precondition: !is_a_inverse().
  const Word& word() const { return *word_; }
  std::string to_string() const;
  std::string to_power_string() const;

  friend bool operator==(const ExtendedWord&, const ExtendedWord&) = default;

 private:
  ExtendedWord() = default;
  std::optional<Word> word_;
};

/**
 * Twisted alphabetical order: reversed inside each class w a*, alphabetical
 * between classes. a^-1 sits after every power of a and before every word
 * containing b.
 */
std::strong_ordering twisted_compare(const ExtendedWord& u, const ExtendedWord& v);
inline bool twisted_less(const ExtendedWord& u, const ExtendedWord& v) { return twisted_compare(u, v) < 0; }

/// Every word of length <= max_len, shortest first then alphabetical.
std::vector<Word> words_up_to(std::size_t max_len);

/**
 * A finite maximal prefix-free set C with its prefix-closed set P of proper
 * prefixes: the leaves and internal nodes of a complete binary tree. Both
 * lists are stored sorted alphabetically; |C| = |P| + 1 = n + 1.
 */
class CodeTree {
 public:
  /// The trivial tree C = {1}.
  CodeTree();
  /// Throws InvalidTree unless `leaves` is a finite maximal prefix-free set.
  explicit CodeTree(std::vector<Word> leaves);

  int n() const { return static_cast<int>(internal_.size()); }
  const std::vector<Word>& leaves() const { return leaves_; }
  const std::vector<Word>& internal() const { return internal_; }
  bool is_trivial() const { return internal_.empty(); }
  bool is_leaf(const Word& w) const;
  bool is_internal(const Word& w) const;
  /// 0-based index in the sorted leaf / internal list; -1 when absent.
  int leaf_index(const Word& w) const;
  int internal_index(const Word& w) const;

  std::string to_string() const;

  friend bool operator==(const CodeTree& s, const CodeTree& t) { return s.leaves_ == t.leaves_; }

 private:
  std::vector<Word> leaves_;
  std::vector<Word> internal_;
};

/// Each code tree with n + 1 leaves exactly once (Catalan(n) of them).
std::vector<CodeTree> enumerate_trees(int n);

/// Leaves / internal nodes split by last letter; 1 belongs to both P_a and P_b.
struct TreeParts {
  std::vector<Word> ca;
  std::vector<Word> cb;
  std::vector<Word> pa;
  std::vector<Word> pb;
};
TreeParts tree_parts(const CodeTree& t);

/// Ranks (1-based) of the a-ending leaves among sorted C and their
/// left-branch lengths.
struct TreeSignature {
  int n = 0;
  std::vector<int> ranks;
  std::vector<int> lengths;
  friend bool operator==(const TreeSignature&, const TreeSignature&) = default;
};
/// Throws TrivialTree for C = {1}.
TreeSignature signature(const CodeTree& t);
/// Rebuilds the unique tree with this signature. Throws InvalidSignature.
CodeTree reconstruct(const TreeSignature& sig);

struct TreeStats {
  int k = 0;                    // |C_a|
  std::vector<std::int64_t> s;  // partial sums of the branch lengths
  std::int64_t N = 0;           // sum (s_i - 1)
  std::int64_t M = 0;           // |{(p, c) in (P_b \ 1) x C_b : p < c}|
  Partition lambda;             // |{q in P_a : q < c}| over sorted C_b
};
TreeStats tree_stats(const CodeTree& t);

/// M + sum i_h == (n+1)(k-1) + k - k(k-1)/2, with C~_a = {1} for C = {1}.
bool lemma3_check(const CodeTree& t);

/// An element of F_> = {(c, g) in C x C~_a : c > g}.
struct PhiSource {
  Word c;
  Word gamma;
  friend auto operator<=>(const PhiSource&, const PhiSource&) = default;
};
/// An element of E_2 (pair p < c), E_3 (single c in C_b) or E_4 (pair g < c).
struct PhiTarget {
  int part = 0;  // 2, 3 or 4
  Word first;
  Word second;   // empty for part 3
  friend auto operator<=>(const PhiTarget&, const PhiTarget&) = default;
};
struct PhiEntry {
  PhiSource source;
  PhiTarget target;
};
std::vector<PhiEntry> phi_bijection(const CodeTree& t);
/// The disjoint union E_2 + E_3 + E_4 built from its definition.
std::vector<PhiTarget> phi_codomain(const CodeTree& t);
/// phi is injective and its image is exactly the codomain.
bool phi_is_bijective(const CodeTree& t);

/// pa^i < qb^j whenever p <= q, all words of length <= max_len.
CheckOutcome prefix_order_check(std::size_t max_len);
/// Classes w a* restricted to words of length <= max_len are intervals.
CheckOutcome class_interval_check(std::size_t max_len);
/// Opposite orders within a class; class-determined order across classes;
/// mu is order preserving on words ending in a.
CheckOutcome twisted_class_check(std::size_t max_len);
/// mu(d) <= mu(c') (twisted) for every tree with at most max_n internal nodes.
CheckOutcome lower_bound_check(int max_n);
/// All four of the above at one bound.
CheckOutcome order_lemmas_check(int n);

}  // namespace census
