#include "hfp/gf2.hpp"

#include <algorithm>
#include <iterator>

namespace hfp {

Gf2Vector gf2_add(const Gf2Vector& a, const Gf2Vector& b) {
  Gf2Vector out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Gf2Vector Gf2Reducer::reduce(Gf2Vector v) const {
  while (!v.empty()) {
    auto it = basis_.find(v.back());
    if (it == basis_.end()) break;
    v = gf2_add(v, it->second);
  }
  return v;
}

bool Gf2Reducer::add(Gf2Vector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  std::size_t pivot = v.back();
  basis_.emplace(pivot, std::move(v));
  return true;
}

std::size_t gf2_rank(const std::vector<Gf2Vector>& columns) {
  Gf2Reducer r;
  for (const auto& c : columns) r.add(c);
  return r.rank();
}

std::vector<Gf2Vector> gf2_kernel(const std::vector<Gf2Vector>& columns) {
  // reduced column together with the set of original columns it sums
  std::unordered_map<std::size_t, std::pair<Gf2Vector, Gf2Vector>> basis;
  std::vector<Gf2Vector> kernel;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    Gf2Vector v = columns[j];
    Gf2Vector combo{j};
    while (!v.empty()) {
      auto it = basis.find(v.back());
      if (it == basis.end()) break;
      v = gf2_add(v, it->second.first);
      combo = gf2_add(combo, it->second.second);
    }
    if (v.empty()) {
      kernel.push_back(std::move(combo));
    } else {
      std::size_t pivot = v.back();
      basis.emplace(pivot, std::make_pair(std::move(v), std::move(combo)));
    }
  }
  return kernel;
}

}  // namespace hfp
