#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace hfp {

// Sparse GF(2) vector: sorted, duplicate-free indices of nonzero entries.
using Gf2Vector = std::vector<std::size_t>;

Gf2Vector gf2_add(const Gf2Vector& a, const Gf2Vector& b);

// Incremental column reduction keyed by the largest nonzero index.
class Gf2Reducer {
 public:
  // Returns true when v is independent of the columns added so far.
  bool add(Gf2Vector v);
  // Reduces v against the stored basis without inserting it.
  Gf2Vector reduce(Gf2Vector v) const;
  std::size_t rank() const { return basis_.size(); }

 private:
  std::unordered_map<std::size_t, Gf2Vector> basis_;
};

std::size_t gf2_rank(const std::vector<Gf2Vector>& columns);

// Basis of {c : sum_j c_j columns[j] = 0}, as sets of column indices.
std::vector<Gf2Vector> gf2_kernel(const std::vector<Gf2Vector>& columns);

}  // namespace hfp
