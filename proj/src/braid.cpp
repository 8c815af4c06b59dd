#include "homrep/braid.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "homrep/errors.hpp"

namespace homrep {

namespace {

std::vector<int> parse_csv_ints(const std::string& csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n_ < 1) throw std::invalid_argument("braid word needs n >= 1");
  for (int l : letters_) {
    int a = std::abs(l);
    if (a < 1 || a > n_ - 1) throw std::invalid_argument("braid letter out of range");
  }
}

BraidWord BraidWord::parse(int n, const std::string& csv) {
  return BraidWord(n, parse_csv_ints(csv));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw NotAPartition("parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw NotAPartition("parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& csv) {
  return Partition(parse_csv_ints(csv));
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int col = 0; parts_.empty() ? false : col < parts_[0]; ++col) {
    int cnt = 0;
    for (int p : parts_)
      if (p > col) ++cnt;
    out.push_back(cnt);
  }
  return Partition(std::move(out));
}

std::string Partition::text() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s.empty() ? "(empty)" : s;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Composition::Composition(int n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != n_ - 1)
    throw std::invalid_argument("composition length must be n-1");
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("composition entries must be >= 0");
}

int Composition::weight() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string Composition::text() const {
  std::string s = "(";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

std::vector<Composition> compositions(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("compositions need n >= 1, m >= 0");
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n - 1) {
      if (remaining == 0) out.push_back(Composition(n, cur));
      return;
    }
    if (pos == n - 2) {
      cur.push_back(remaining);
      rec(pos + 1, 0);
      cur.pop_back();
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur.push_back(v);
      rec(pos + 1, remaining - v);
      cur.pop_back();
    }
  };
  if (n == 1) {
    if (m == 0) out.push_back(Composition(1, {}));
    return out;
  }
  rec(0, m);
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace homrep
