#ifndef HOMREP_PERM_HPP
#define HOMREP_PERM_HPP

#include <cstdint>
#include <vector>

namespace homrep {

/// Permutation of {0,...,n-1} in one-line notation.  Composition is
/// (p*o)(i) = p(o(i)); s_i denotes the adjacent transposition of i, i+1.
class Perm {
 public:
  explicit Perm(size_t n = 0);
  static Perm transposition(size_t n, size_t i);
  static Perm from_one_line(std::vector<uint8_t> images);

  size_t n() const { return img_.size(); }
  size_t operator()(size_t i) const { return img_[i]; }
  const std::vector<uint8_t>& one_line() const { return img_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;

  bool is_identity() const;
  /// Coxeter length = inversion count.
  size_t length() const;
  /// True when length(w * s_i) < length(w).
  bool right_descent(size_t i) const { return img_[i] > img_[i + 1]; }
  /// True when length(s_i * w) < length(w).
  bool left_descent(size_t i) const;
  Perm right_mul_s(size_t i) const;  // w * s_i
  Perm left_mul_s(size_t i) const;   // s_i * w

  /// Indices i1,...,il with w = s_{i1} * s_{i2} * ... * s_{il}.
  std::vector<size_t> reduced_word() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

 private:
  std::vector<uint8_t> img_;
};

/// All permutations of the Young subgroup fixing the given blocks setwise;
/// blocks are lists of 0-based points.
std::vector<Perm> young_subgroup(size_t n, const std::vector<std::vector<size_t>>& blocks);

/// All n! permutations, n <= 8.
std::vector<Perm> all_permutations(size_t n);

}  // namespace homrep

#endif
