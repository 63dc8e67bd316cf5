#pragma once

#include <string>
#include <vector>

namespace census {

/// Weakly increasing parts 0 <= l_1 <= ... <= l_n <= n.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidPartition when the parts are not weakly increasing or a
  /// part exceeds the number of parts.
  explicit Partition(std::vector<int> parts);
  /// "2,3,3"; the empty string is the empty partition.
  static Partition parse(const std::string& text);

  int size() const { return static_cast<int>(parts_.size()); }
  /// 1-based.
  int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& parts() const { return parts_; }
  int cells() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Every partition with exactly n parts.
std::vector<Partition> partitions_with_parts(int n);

}  // namespace census
