#include "homrep/perm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace homrep {

Perm::Perm(size_t n) : img_(n) {
  for (size_t i = 0; i < n; ++i) img_[i] = static_cast<uint8_t>(i);
}

Perm Perm::transposition(size_t n, size_t i) {
  assert(i + 1 < n);
  Perm p(n);
  std::swap(p.img_[i], p.img_[i + 1]);
  return p;
}

Perm Perm::from_one_line(std::vector<uint8_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (uint8_t v : images) {
    if (v >= images.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  Perm p(images.size());
  p.img_ = std::move(images);
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  assert(n() == o.n());
  Perm r(n());
  for (size_t i = 0; i < n(); ++i) r.img_[i] = img_[o.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r(n());
  for (size_t i = 0; i < n(); ++i) r.img_[img_[i]] = static_cast<uint8_t>(i);
  return r;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < n(); ++i)
    if (img_[i] != i) return false;
  return true;
}

size_t Perm::length() const {
  size_t inv = 0;
  for (size_t i = 0; i < n(); ++i)
    for (size_t j = i + 1; j < n(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Perm::left_descent(size_t i) const {
  // length(s_i w) < length(w) iff i appears after i+1 in the one-line form.
  size_t pos_i = 0, pos_i1 = 0;
  for (size_t k = 0; k < n(); ++k) {
    if (img_[k] == i) pos_i = k;
    if (img_[k] == i + 1) pos_i1 = k;
  }
  return pos_i > pos_i1;
}

Perm Perm::right_mul_s(size_t i) const {
  Perm r = *this;
  std::swap(r.img_[i], r.img_[i + 1]);
  return r;
}

Perm Perm::left_mul_s(size_t i) const {
  Perm r = *this;
  for (size_t k = 0; k < n(); ++k) {
    if (r.img_[k] == i)
      r.img_[k] = static_cast<uint8_t>(i + 1);
    else if (r.img_[k] == i + 1)
      r.img_[k] = static_cast<uint8_t>(i);
  }
  return r;
}

std::vector<size_t> Perm::reduced_word() const {
  // Peel right descents: w = w' * s_i with length dropping by one, so the
  // collected indices read right to left.
  Perm w = *this;
  std::vector<size_t> rev;
  while (!w.is_identity()) {
    size_t i = 0;
    while (!w.right_descent(i)) ++i;
    rev.push_back(i);
    w = w.right_mul_s(i);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::vector<Perm> young_subgroup(size_t n, const std::vector<std::vector<size_t>>& blocks) {
  std::vector<Perm> out{Perm(n)};
  for (const auto& block : blocks) {
    if (block.size() <= 1) continue;
    // All arrangements of this block, composed with what we have so far.
    std::vector<size_t> arr = block;
    std::sort(arr.begin(), arr.end());
    std::vector<Perm> block_perms;
    do {
      Perm p(n);
      std::vector<uint8_t> img(p.one_line());
      for (size_t k = 0; k < block.size(); ++k) img[block[k]] = static_cast<uint8_t>(arr[k]);
      block_perms.push_back(Perm::from_one_line(std::move(img)));
    } while (std::next_permutation(arr.begin(), arr.end()));
    std::vector<Perm> next;
    next.reserve(out.size() * block_perms.size());
    for (const auto& a : out)
      for (const auto& b : block_perms) next.push_back(a * b);
    out = std::move(next);
  }
  return out;
}

std::vector<Perm> all_permutations(size_t n) {
  assert(n <= 8);
  std::vector<uint8_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_one_line(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace homrep
