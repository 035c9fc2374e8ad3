#include "cocharlab/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cocharlab {

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact at every step
  }
  return r;
}

Int multinomial(std::span<const int> parts) {
  int total = std::accumulate(parts.begin(), parts.end(), 0);
  Int r = factorial(total);
  for (int p : parts) r /= factorial(p);
  return r;
}

bool rat_to_int(const Rat& q, Int* out) {
  if (q.get_den() != 1) return false;
  if (out) *out = q.get_num();
  return true;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition part <= 0");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition not weakly decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::row(int n) {
  return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition Partition::column(int n) {
  return n == 0 ? Partition() : Partition(std::vector<int>(n, 1));
}

std::optional<Partition> Partition::normalized(const std::vector<long>& shape) {
  size_t end = shape.size();
  while (end > 0 && shape[end - 1] == 0) --end;
  std::vector<int> parts;
  parts.reserve(end);
  for (size_t i = 0; i < end; ++i) {
    if (shape[i] <= 0) return std::nullopt;
    if (i > 0 && shape[i - 1] < shape[i]) return std::nullopt;
    parts.push_back(static_cast<int>(shape[i]));
  }
  return Partition(std::move(parts));
}

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[i - 1];
}

bool Partition::operator<(const Partition& other) const {
  if (weight_ != other.weight_) return weight_ < other.weight_;
  return parts_ > other.parts_;  // reverse-lex: larger sequence first
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

int Composition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Composition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

std::vector<Partition> partitions_of(int n, std::optional<int> max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int max_part) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_parts && static_cast<int>(cur.size()) >= *max_parts) return;
    for (int p = std::min(rem, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return Partition();
  std::vector<int> cols(p.parts()[0], 0);
  for (int row : p.parts())
    for (int j = 0; j < row; ++j) ++cols[j];
  return Partition(std::move(cols));
}

Int hook_dimension(const Partition& p) {
  if (p.empty()) return 1;
  Partition c = conjugate(p);
  Int num = factorial(p.weight());
  Int den = 1;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j)
      den *= p.part(i) - j + c.part(j) - i + 1;
  return num / den;  // hook products divide n! exactly
}

std::vector<Composition> s_compositions(int total, int parts) {
  std::vector<Composition> out;
  std::vector<int> cur(parts, 0);
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == parts) {
      if (rem == 0) out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      if (i == 0 && v == 1) continue;
      cur[i] = v;
      self(self, i + 1, rem - v);
    }
    cur[i] = 0;
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace cocharlab
