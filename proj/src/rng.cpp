#include "sl2/rng.hpp"

#include <numeric>

#include "sl2/errors.hpp"

namespace sl2 {

std::vector<uint32_t> Rng::distinct(uint32_t n, uint32_t k) {
  if (k > n) fail(Err::BadInput, "distinct: k > n");
  std::vector<uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  for (uint32_t i = 0; i < k; ++i) {
    uint32_t j = i + static_cast<uint32_t>(below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace sl2
