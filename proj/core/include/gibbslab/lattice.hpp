#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <vector>

#include "gibbslab/errors.hpp"
#include "gibbslab/rng.hpp"

namespace gibbslab {

// Lattice vector in Z^d, d <= 4. Unused coordinates stay 0 so equality and
// hashing are dimension-agnostic. Coordinates are capped at +-32767 by the
// 16-bit packing in key64().
struct Site {
  std::array<std::int32_t, 4> c{0, 0, 0, 0};

  bool operator==(const Site&) const = default;

  std::int32_t operator[](int k) const { return c[static_cast<std::size_t>(k)]; }
  std::int32_t& operator[](int k) { return c[static_cast<std::size_t>(k)]; }

  int linf() const {
    int m = 0;
    for (auto v : c) m = std::max(m, std::abs(v));
    return m;
  }
  double l2() const {
    double s = 0;
    for (auto v : c) s += static_cast<double>(v) * v;
    return std::sqrt(s);
  }

  Site operator+(const Site& o) const {
    Site r;
    for (int k = 0; k < 4; ++k) r.c[k] = c[k] + o.c[k];
    return r;
  }
  Site operator-(const Site& o) const {
    Site r;
    for (int k = 0; k < 4; ++k) r.c[k] = c[k] - o.c[k];
    return r;
  }
  Site operator-() const {
    Site r;
    for (int k = 0; k < 4; ++k) r.c[k] = -c[k];
    return r;
  }

  // Injective 64-bit key (16 bits per coordinate, offset binary).
  std::uint64_t key64() const {
    std::uint64_t k = 0;
    for (int i = 0; i < 4; ++i) {
      k |= static_cast<std::uint64_t>(static_cast<std::uint16_t>(c[i] + 0x8000)) << (16 * i);
    }
    return k;
  }
};

inline Site make_site(std::initializer_list<int> coords) {
  Site s;
  int k = 0;
  for (int v : coords) {
    if (k >= 4) throw input_error("Site: dimension > 4 not supported");
    if (std::abs(v) > 0x7FFF) throw input_error("Site: coordinate out of range");
    s.c[k++] = v;
  }
  return s;
}

struct SiteHash {
  std::size_t operator()(const Site& s) const { return splitmix64(s.key64()); }
};

inline bool lex_less(const Site& a, const Site& b) {
  for (int k = 0; k < 4; ++k) {
    if (a.c[k] != b.c[k]) return a.c[k] < b.c[k];
  }
  return false;
}

// The box L_n = [-n, n]^d with row-major site enumeration.
class Box {
 public:
  Box(int n, int dim) : n_(n), dim_(dim) {
    if (n < 0) throw input_error("Box: n must be >= 0");
    if (dim < 1 || dim > 4) throw input_error("Box: dim must be in [1,4]");
    if (n > 0x7FF) throw input_error("Box: n too large");
    side_ = 2 * n + 1;
    size_ = 1;
    for (int k = 0; k < dim; ++k) size_ *= static_cast<std::size_t>(side_);
  }

  int n() const { return n_; }
  int dim() const { return dim_; }
  std::size_t size() const { return size_; }

  bool contains(const Site& s) const {
    for (int k = 0; k < dim_; ++k)
      if (std::abs(s.c[k]) > n_) return false;
    for (int k = dim_; k < 4; ++k)
      if (s.c[k] != 0) return false;
    return true;
  }

  std::size_t index_of(const Site& s) const {
    std::size_t idx = 0;
    for (int k = 0; k < dim_; ++k) idx = idx * side_ + static_cast<std::size_t>(s.c[k] + n_);
    return idx;
  }

  Site site_at(std::size_t idx) const {
    Site s;
    for (int k = dim_ - 1; k >= 0; --k) {
      s.c[k] = static_cast<std::int32_t>(idx % side_) - n_;
      idx /= side_;
    }
    return s;
  }

  std::vector<Site> sites() const {
    std::vector<Site> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back(site_at(i));
    return out;
  }

  bool nested_in(const Box& outer) const { return dim_ == outer.dim_ && n_ <= outer.n_; }

 private:
  int n_;
  int dim_;
  int side_;
  std::size_t size_;
};

}  // namespace gibbslab
