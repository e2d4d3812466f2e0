#pragma once

#include <vector>

#include "ipf/point.hpp"

namespace ipf {

/// A permutation of {0..n-1}, stored as its image list.
///
/// Composition is postfix: a.then(b) applies a first, then b, so that
/// acting on points satisfies b.act(a.act(x)) == a.then(b).act(x).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// All permutations of degree n in lexicographic image order. n must be small.
  static std::vector<Permutation> all(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;

  Permutation inverse() const;
  Permutation then(const Permutation& next) const;

  /// Coordinate shuffle: coordinate sigma(i) of the result is x[i].
  Point act(const Point& x) const;
  std::vector<int> act(const std::vector<int>& v) const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

}  // namespace ipf
