#include "gibbslab/interaction.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "gibbslab/numerics.hpp"

namespace gibbslab {

Interaction::Interaction(int dim, std::vector<std::pair<Site, double>> entries) : dim_(dim) {
  if (dim < 1 || dim > 4) throw input_error("Interaction: dim must be in [1,4]");
  std::unordered_map<Site, double, SiteHash> table;
  const Site origin{};
  for (const auto& [v, j] : entries) {
    if (!std::isfinite(j)) throw input_error("Interaction: non-finite coupling");
    for (int k = dim; k < 4; ++k)
      if (v.c[k] != 0) throw input_error("Interaction: offset exceeds dimension");
    if (j == 0.0) continue;
    if (v == origin) throw input_error("Interaction: offset 0 is not a pair coupling");
    auto check_insert = [&](const Site& s) {
      auto [it, fresh] = table.emplace(s, j);
      if (!fresh && it->second != j)
        throw input_error("Interaction: J(i) != J(-i) in the entry list");
    };
    check_insert(v);
    check_insert(-v);
  }
  entries_.assign(table.begin(), table.end());
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  CompensatedSum s;
  for (const auto& [v, j] : entries_) {
    range_ = std::max(range_, v.linf());
    s.add(std::abs(j));
  }
  sigma_ = s.result();
}

Interaction Interaction::nearest_neighbor(int dim, double j) {
  std::vector<std::pair<Site, double>> e;
  for (int k = 0; k < dim; ++k) {
    Site v{};
    v.c[k] = 1;
    e.emplace_back(v, j);
  }
  return Interaction(dim, std::move(e));
}

double Interaction::at(const Site& v) const {
  for (const auto& [s, j] : entries_)
    if (s == v) return j;
  return 0.0;
}

}  // namespace gibbslab
