#pragma once

#include <utility>
#include <vector>

#include "gibbslab/lattice.hpp"

namespace gibbslab {

// Finite-support symmetric pair interaction J on Z^d, with p(i) = |J(i)| and
// sigma = sum_i p(i).
class Interaction {
 public:
  // Entries may list one representative per +-pair; the mirror image is
  // filled in automatically. Listing both is fine if the values agree.
  Interaction(int dim, std::vector<std::pair<Site, double>> entries);

  static Interaction none(int dim) { return Interaction(dim, {}); }
  static Interaction nearest_neighbor(int dim, double j);

  int dim() const { return dim_; }
  int range() const { return range_; }  // l-infinity reach of the support
  double sigma() const { return sigma_; }

  const std::vector<std::pair<Site, double>>& entries() const { return entries_; }

  double at(const Site& v) const;
  double p(const Site& v) const { return std::abs(at(v)); }

  bool operator==(const Interaction& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
  }

 private:
  int dim_;
  int range_ = 0;
  double sigma_ = 0.0;
  std::vector<std::pair<Site, double>> entries_;  // both signs stored, lex-sorted
};

}  // namespace gibbslab
