#include "taulab/search.hpp"

#include <cstdlib>

namespace taulab {

std::vector<std::vector<int>> bounded_subsets(int n, int w) {
  std::vector<std::vector<int>> out;
  out.push_back({});
  std::vector<int> comb;
  for (int size = 1; size <= w; ++size) {
    if (size > n) break;
    comb.assign(size, 0);
    for (int i = 0; i < size; ++i) comb[i] = i;
    while (true) {
      out.push_back(comb);
      int i = size - 1;
      while (i >= 0 && comb[i] == n - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

int worker_count() {
  const char* env = std::getenv("TAULAB_WORKERS");
  if (!env) return 1;
  const long v = std::strtol(env, nullptr, 10);
  if (v < 1 || v > 256) throw InputError("TAULAB_WORKERS must be in 1..256");
  return static_cast<int>(v);
}

}  // namespace taulab
