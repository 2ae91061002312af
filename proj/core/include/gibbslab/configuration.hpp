#pragma once

#include <cmath>
#include <optional>
#include <unordered_map>

#include "gibbslab/lattice.hpp"

namespace gibbslab {

// Spin configuration, stored sparsely. Sites without a stored value read as
// `fill` when one is set; reading an undefined site is an input error.
class Configuration {
 public:
  Configuration() = default;

  static Configuration constant(double v) {
    Configuration c;
    c.fill_ = v;
    if (v != 0.0) c.tempered_constant_ = std::abs(v);
    return c;
  }
  static Configuration zero() { return constant(0.0); }

  void set(const Site& s, double v) {
    if (!std::isfinite(v)) throw input_error("Configuration: non-finite spin");
    spins_[s] = v;
  }

  bool defined_at(const Site& s) const { return fill_.has_value() || spins_.contains(s); }

  double at(const Site& s) const {
    auto it = spins_.find(s);
    if (it != spins_.end()) return it->second;
    if (fill_) return *fill_;
    throw input_error("Configuration: missing spin at a required site");
  }

  const std::unordered_map<Site, double, SiteHash>& stored() const { return spins_; }
  std::optional<double> fill() const { return fill_; }

  // Declared temperedness class T(d) with constant c.
  double tempered_degree() const { return tempered_degree_; }
  double tempered_constant() const { return tempered_constant_; }
  void declare_tempered(double constant, double degree) {
    if (constant < 0 || degree < 0) throw input_error("Configuration: bad temperedness class");
    tempered_constant_ = constant;
    tempered_degree_ = degree;
  }

  // |sigma_i| <= c (1+|i|)^d on every stored site (and on the fill value).
  bool satisfies_declared_temperedness() const {
    if (fill_ && std::abs(*fill_) > tempered_constant_) return false;
    for (const auto& [s, v] : spins_) {
      if (std::abs(v) > tempered_constant_ * std::pow(1.0 + s.l2(), tempered_degree_))
        return false;
    }
    return true;
  }

 private:
  std::unordered_map<Site, double, SiteHash> spins_;
  std::optional<double> fill_;
  double tempered_degree_ = 0.0;
  double tempered_constant_ = 1.0;
};

}  // namespace gibbslab
