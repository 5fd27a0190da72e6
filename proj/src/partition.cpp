#include "strata/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "strata/error.hpp"

namespace strata {

namespace {

void trim_trailing_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::string join(std::span<const int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

// Appends every partition of n with parts <= max_part to `out`, largest first.
void partitions_rec(int n, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(n - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  trim_trailing_zeros(parts_);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw DomainError("partition has a non-positive part: " + join(parts_));
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw DomainError("partition is not weakly decreasing: " + join(parts_));
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Bipartition::Bipartition(std::vector<int> entries) : entries_(std::move(entries)) {
  trim_trailing_zeros(entries_);
  if (!is_bipartition(entries_))
    throw DomainError("not a bipartition: " + join(entries_));
  weight_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

Bipartition Bipartition::from_partition(const Partition& p) { return Bipartition(p.vector()); }

Partition Bipartition::odd_track() const {
  std::vector<int> v;
  for (std::size_t i = 0; i < entries_.size(); i += 2) v.push_back(entries_[i]);
  return Partition(std::move(v));
}

Partition Bipartition::even_track() const {
  std::vector<int> v;
  for (std::size_t i = 1; i < entries_.size(); i += 2) v.push_back(entries_[i]);
  return Partition(std::move(v));
}

bool is_bipartition(std::span<const int> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0) return false;
    if (i + 2 < seq.size() && seq[i] < seq[i + 2]) return false;
  }
  return true;
}

bool has_excess(const Bipartition& bp, Excess x) {
  const auto e = bp.entries();
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    // 0-based even index i is the 1-based odd position i+1.
    const int slack = (i % 2 == 0) ? x.e : x.e_prime;
    if (e[i] + slack < e[i + 1]) return false;
  }
  return true;
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n, Excess x) {
  std::vector<Bipartition> out;
  if (n < 0) return out;
  for (int k = 0; k <= n; ++k) {
    const auto odd = enumerate_partitions(k);
    const auto even = enumerate_partitions(n - k);
    for (const auto& a : odd) {
      for (const auto& b : even) {
        std::vector<int> v(2 * std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) v[2 * i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) v[2 * i + 1] = b[i];
        Bipartition bp(std::move(v));
        if (has_excess(bp, x)) out.push_back(std::move(bp));
      }
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Bipartition bp_sum(const Bipartition& a, const Bipartition& b) {
  std::vector<int> v(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.at(i) + b.at(i);
  return Bipartition(std::move(v));
}

int n_invariant(const Bipartition& bp, int half) {
  if (bp.weight() != half)
    throw Error(ErrorCode::weight_mismatch, "n_invariant: weight of " + to_string(bp) +
                                                " is " + std::to_string(bp.weight()) +
                                                ", expected " + std::to_string(half));
  int total = 0;
  int partial = 0;
  for (int v : bp.entries()) {
    partial += v;
    total += half - partial;
  }
  return total;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(p.empty() ? 0 : p[0], 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

std::string to_string(const Partition& p) { return join(p.parts()); }
std::string to_string(const Bipartition& bp) { return join(bp.entries()); }
std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const Bipartition& bp) { return os << to_string(bp); }

std::vector<int> parse_int_list(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') s += c;
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::parse_error, "cannot parse integer list '" + text + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace strata
