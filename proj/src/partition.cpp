#include "census/partition.hpp"

#include <numeric>
#include <sstream>

#include "census/errors.hpp"

namespace census {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  const int n = size();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || parts_[i] > n) throw InvalidPartition("part out of range [0, " + std::to_string(n) + "]");
    if (i > 0 && parts_[i] < parts_[i - 1]) throw InvalidPartition("parts must be weakly increasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidPartition("bad part '" + item + "'");
    }
  }
  return Partition(std::move(parts));
}

int Partition::cells() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::vector<Partition> partitions_with_parts(int n) {
  std::vector<Partition> out;
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  // odometer over weakly increasing sequences with entries in [0, n]
  while (true) {
    out.emplace_back(parts);
    int i = n - 1;
    while (i >= 0 && parts[static_cast<std::size_t>(i)] == n) --i;
    if (i < 0) break;
    const int v = parts[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < n; ++j) parts[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

}  // namespace census
