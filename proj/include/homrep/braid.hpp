#ifndef HOMREP_BRAID_HPP
#define HOMREP_BRAID_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace homrep {

/// Word in the braid generators: letters +-1, ..., +-(n-1), sign for the
/// inverse.  The empty word is the identity.
class BraidWord {
 public:
  BraidWord(int n, std::vector<int> letters);
  static BraidWord parse(int n, const std::string& csv);

  int n() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }

 private:
  int n_;
  std::vector<int> letters_;
};

/// Partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;  // the empty partition
  explicit Partition(std::vector<int> parts);
  static Partition parse(const std::string& csv);

  const std::vector<int>& parts() const { return parts_; }
  size_t rows() const { return parts_.size(); }
  int sum() const;
  int part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  Partition conjugate() const;
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  std::string text() const;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in the order produced by first-part-descending
/// recursion.
std::vector<Partition> partitions_of(int n);

/// Sequence (pi_1, ..., pi_{n-1}) of non-negative integers.
class Composition {
 public:
  Composition(int n, std::vector<int> entries);

  int n() const { return n_; }
  const std::vector<int>& entries() const { return entries_; }
  int weight() const;
  bool operator==(const Composition& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
  }
  std::string text() const;

 private:
  int n_;
  std::vector<int> entries_;
};

/// All length-(n-1) non-negative integer sequences of weight m, first entry
/// descending (lexicographically largest first).
std::vector<Composition> compositions(int n, int m);

long binomial(int n, int k);

}  // namespace homrep

#endif
