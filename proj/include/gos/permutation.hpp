#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gos/errors.hpp"

namespace gos {

using Stub = std::uint32_t;  // stub labels are 1-based: {1, ..., 2E}

// Permutation of {1,...,n}. Composition is left to right throughout: in
// p.then(q), x is sent to q(p(x)), written x(pq).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t n) : img_(n + 1) {
    for (std::size_t i = 0; i <= n; ++i) img_[i] = static_cast<Stub>(i);
  }

  // images[k] is the image of k+1.
  static Permutation from_images(const std::vector<Stub>& images) {
    Permutation p;
    p.img_.resize(images.size() + 1);
    p.img_[0] = 0;
    std::vector<bool> seen(images.size() + 1, false);
    for (std::size_t k = 0; k < images.size(); ++k) {
      Stub v = images[k];
      if (v < 1 || v > images.size() || seen[v])
        throw GosError(ErrorKind::BadParameter, "not a permutation of {1..n}");
      seen[v] = true;
      p.img_[k + 1] = v;
    }
    return p;
  }

  std::size_t size() const { return img_.empty() ? 0 : img_.size() - 1; }

  Stub operator()(Stub x) const { return img_[x]; }

  void set_image(Stub x, Stub y) { img_[x] = y; }

  Permutation then(const Permutation& next) const {
    Permutation r(size());
    for (Stub x = 1; x <= size(); ++x) r.img_[x] = next.img_[img_[x]];
    return r;
  }

  Permutation inverse() const {
    Permutation r(size());
    for (Stub x = 1; x <= size(); ++x) r.img_[img_[x]] = x;
    return r;
  }

  bool is_identity() const {
    for (Stub x = 1; x <= size(); ++x)
      if (img_[x] != x) return false;
    return true;
  }

  // Disjoint cycles, each rotated to start at its smallest element, listed in
  // order of smallest element. Fixed points included only when asked.
  std::vector<std::vector<Stub>> cycles(bool include_fixed_points = false) const {
    std::vector<std::vector<Stub>> out;
    std::vector<bool> seen(size() + 1, false);
    for (Stub s = 1; s <= size(); ++s) {
      if (seen[s]) continue;
      std::vector<Stub> cyc;
      Stub x = s;
      do {
        seen[x] = true;
        cyc.push_back(x);
        x = img_[x];
      } while (x != s);
      if (cyc.size() > 1 || include_fixed_points) out.push_back(std::move(cyc));
    }
    return out;
  }

  std::size_t cycle_count() const {
    std::size_t n = 0;
    std::vector<bool> seen(size() + 1, false);
    for (Stub s = 1; s <= size(); ++s) {
      if (seen[s]) continue;
      ++n;
      for (Stub x = s; !seen[x]; x = img_[x]) seen[x] = true;
    }
    return n;
  }

  std::string to_string(bool include_fixed_points = false) const {
    auto cs = cycles(include_fixed_points);
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& c : cs) {
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c[i]);
      }
      out += ')';
    }
    return out;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

 private:
  std::vector<Stub> img_;  // img_[0] unused
};

}  // namespace gos
