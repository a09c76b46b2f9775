#include <omp.h>

#include <algorithm>
#include <exception>

#include "hom_search.hpp"
#include "tcd/kernels.hpp"

namespace tcd::kernels {

FlatRows join(const FlatRows& r, std::size_t r_in, const FlatRows& s) {
  const std::size_t mid = r.width - r_in;
  const std::size_t s_out = s.width - mid;
  FlatRows out;
  out.width = r_in + s_out;

  // Rows of s sharing an input prefix are contiguous, so each row of r
  // probes one range found by binary search.
  auto prefix_less = [&](std::size_t j, const std::uint16_t* key) {
    return std::lexicographical_compare(s.row(j), s.row(j) + mid, key, key + mid);
  };
  auto key_less = [&](const std::uint16_t* key, std::size_t j) {
    return std::lexicographical_compare(key, key + mid, s.row(j), s.row(j) + mid);
  };

  const long n = static_cast<long>(r.rows);
  std::vector<std::vector<std::uint16_t>> parts(static_cast<std::size_t>(omp_get_max_threads()));
  std::vector<std::size_t> counts(parts.size(), 0);
#pragma omp parallel
  {
    const int tid = omp_get_thread_num();
    auto& local = parts[tid];
#pragma omp for schedule(static)
    for (long i = 0; i < n; ++i) {
      const std::uint16_t* x = r.row(static_cast<std::size_t>(i));
      const std::uint16_t* key = x + r_in;
      std::size_t lo = 0, hi = s.rows;
      while (lo < hi) {
        std::size_t m = (lo + hi) / 2;
        if (prefix_less(m, key)) lo = m + 1; else hi = m;
      }
      for (std::size_t j = lo; j < s.rows && !key_less(key, j); ++j) {
        local.insert(local.end(), x, x + r_in);
        local.insert(local.end(), s.row(j) + mid, s.row(j) + s.width);
        ++counts[tid];
      }
    }
  }
  for (std::size_t t = 0; t < parts.size(); ++t) {
    out.data.insert(out.data.end(), parts[t].begin(), parts[t].end());
    out.rows += counts[t];
  }
  sort_unique(out);
  return out;
}

std::vector<GroupTuple> conjugacy_closure(const FiniteGroup& g,
                                          const std::vector<GroupTuple>& seeds) {
  std::vector<GroupTuple> uniq = seeds;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  // Each orbit is reached in one step from its seed, so the closure is the
  // set of all seed conjugates.
  const std::size_t order = g.order();
  const long total = static_cast<long>(uniq.size() * order);
  std::vector<GroupTuple> all(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (long k = 0; k < total; ++k) {
    const GroupTuple& t = uniq[static_cast<std::size_t>(k) / order];
    const Elem h = static_cast<Elem>(static_cast<std::size_t>(k) % order);
    GroupTuple c(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) c[i] = g.conj(t[i], h);
    all[static_cast<std::size_t>(k)] = std::move(c);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::uint64_t hom_count(const FiniteGroup& g, std::size_t ngens,
                        const std::vector<std::vector<int>>& relators, std::uint64_t budget) {
  std::atomic<std::uint64_t> visited{0};
  detail::HomSearch search(g, ngens, relators, budget, visited);
  detail::HomSearch::Assignment root(ngens, -1);
  search.tick();
  if (!search.propagate(root)) return 0;
  const std::size_t branch = search.first_unassigned(root);
  if (branch == ngens) return 1;

  const long order = static_cast<long>(g.order());
  std::uint64_t total = 0;
  std::exception_ptr failure;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
  for (long x = 0; x < order; ++x) {
    try {
      detail::HomSearch::Assignment a = root;
      a[branch] = static_cast<int>(x);
      total += search.count(std::move(a));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return total;
}

}  // namespace tcd::kernels
