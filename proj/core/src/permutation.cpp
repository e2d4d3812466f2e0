#include "ipf/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "ipf/error.hpp"

namespace ipf {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  if (img_.empty()) throw DimensionError("permutation needs degree >= 1");
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
      throw DomainError("permutation images must be a bijection of 0..n-1");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw DimensionError("permutation needs degree >= 1");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (degree() != next.degree()) throw DimensionError("permutation degrees differ");
  std::vector<int> img(img_.size());
  for (int i = 0; i < degree(); ++i)
    img[static_cast<std::size_t>(i)] = next(img_[static_cast<std::size_t>(i)]);
  return Permutation(std::move(img));
}

Point Permutation::act(const Point& x) const {
  if (x.dim() != degree()) throw DimensionError("point dimension does not match permutation degree");
  std::vector<int> c(img_.size());
  for (int i = 0; i < degree(); ++i) c[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = x[i];
  return Point(std::move(c));
}

std::vector<int> Permutation::act(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != degree())
    throw DimensionError("vector dimension does not match permutation degree");
  std::vector<int> c(v.size());
  for (int i = 0; i < degree(); ++i)
    c[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = v[static_cast<std::size_t>(i)];
  return c;
}

}  // namespace ipf
