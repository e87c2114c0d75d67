#include "jackchar/partition.hpp"

#include <algorithm>
#include <functional>

#include "jackchar/error.hpp"

namespace jackchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  for (int p : parts_) {
    if (p <= 0) fail(ErrorCode::UnsupportedPartition, "parts must be positive");
    size_ += p;
  }
}

Partition Partition::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    fail(ErrorCode::UnsupportedPartition, "bad partition text: " + text);
  std::vector<int> parts;
  std::string body = text.substr(1, text.size() - 2);
  size_t pos = 0;
  while (pos < body.size()) {
    size_t comma = body.find(',', pos);
    std::string token = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty()) fail(ErrorCode::UnsupportedPartition, "bad partition text: " + text);
    try {
      size_t used = 0;
      int value = std::stoi(token, &used);
      while (used < token.size() && token[used] == ' ') ++used;
      if (used != token.size())
        fail(ErrorCode::UnsupportedPartition, "bad partition text: " + text);
      parts.push_back(value);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(ErrorCode::UnsupportedPartition, "bad partition text: " + text);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == body.size())
      fail(ErrorCode::UnsupportedPartition, "bad partition text: " + text);
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

int Partition::multiplicity(int value) const {
  int count = 0;
  for (int p : parts_) count += (p == value);
  return count;
}

Integer Partition::z_factor() const {
  Integer z = 1;
  int i = 0;
  while (i < length()) {
    int j = i;
    while (j < length() && parts_[j] == parts_[i]) ++j;
    int mult = j - i;
    for (int t = 0; t < mult; ++t) z *= parts_[i];
    z *= factorial(mult);
    i = j;
  }
  return z;
}

Partition Partition::concat(const Partition& other) const {
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(parts));
}

Partition Partition::padded_with_ones(int count) const {
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), static_cast<size_t>(count), 1);
  return Partition(std::move(parts));
}

Partition Partition::with_value_removed(int value) const {
  std::vector<int> parts = parts_;
  auto it = std::find(parts.begin(), parts.end(), value);
  if (it == parts.end())
    fail(ErrorCode::UnsupportedPartition, "value not present: " + std::to_string(value));
  parts.erase(it);
  return Partition(std::move(parts));
}

bool Partition::dominates(const Partition& other) const {
  if (size_ != other.size_) fail(ErrorCode::SizeMismatch, "dominance needs equal sizes");
  long a = 0, b = 0;
  int rows = std::max(length(), other.length());
  for (int i = 1; i <= rows; ++i) {
    a += part(i);
    b += other.part(i);
    if (a < b) return false;
  }
  return true;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  if (n < 0) return out;
  generate(n, n == 0 ? 1 : n, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int s = 0; s <= n; ++s) {
    auto block = partitions_of(s);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<Partition> partitions_bounded(int max_size, int max_parts) {
  std::vector<Partition> out;
  for (const Partition& p : partitions_up_to(max_size))
    if (p.length() <= max_parts) out.push_back(p);
  return out;
}

}  // namespace jackchar
