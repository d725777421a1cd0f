#include "eca/ring.hpp"

#include "eca/errors.hpp"

namespace eca {

bool descends(TimeLocation child, TimeLocation ancestor, Index n) {
  return child.t > ancestor.t && dist(child.i, ancestor.i, n) <= child.t - ancestor.t;
}

std::vector<Index> neighborhood(Index i, Index r, Index n) {
  if (r < 0 || 2 * r + 1 > n) throw InvalidRadius("neighborhood radius too large for ring");
  std::vector<Index> out;
  out.reserve(2 * r + 1);
  for (Index d = -r; d <= r; ++d) out.push_back(wrap(i + d, n));
  return out;
}

}  // namespace eca
