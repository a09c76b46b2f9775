#include <algorithm>
#include <numeric>
#include <set>

#include "hom_search.hpp"
#include "tcd/kernels.hpp"

namespace tcd::kernels {

void sort_unique(FlatRows& r) {
  const std::size_t w = r.width;
  if (w == 0) {
    r.rows = r.rows > 0 ? 1 : 0;
    r.data.clear();
    return;
  }
  std::vector<std::size_t> idx(r.rows);
  std::iota(idx.begin(), idx.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(r.row(a), r.row(a) + w, r.row(b), r.row(b) + w);
  };
  std::sort(idx.begin(), idx.end(), less);
  std::vector<std::uint16_t> out;
  out.reserve(r.data.size());
  std::size_t kept = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const std::uint16_t* row = r.row(idx[k]);
    if (kept > 0 && std::equal(row, row + w, out.data() + (kept - 1) * w)) continue;
    out.insert(out.end(), row, row + w);
    ++kept;
  }
  r.data = std::move(out);
  r.rows = kept;
}

namespace serial {

FlatRows join(const FlatRows& r, std::size_t r_in, const FlatRows& s) {
  const std::size_t mid = r.width - r_in;
  const std::size_t s_out = s.width - mid;
  FlatRows out;
  out.width = r_in + s_out;
  for (std::size_t i = 0; i < r.rows; ++i) {
    const std::uint16_t* x = r.row(i);
    for (std::size_t j = 0; j < s.rows; ++j) {
      const std::uint16_t* y = s.row(j);
      if (!std::equal(x + r_in, x + r.width, y)) continue;
      out.data.insert(out.data.end(), x, x + r_in);
      out.data.insert(out.data.end(), y + mid, y + s.width);
      ++out.rows;
    }
  }
  sort_unique(out);
  return out;
}

std::vector<GroupTuple> conjugacy_closure(const FiniteGroup& g,
                                          const std::vector<GroupTuple>& seeds) {
  std::set<GroupTuple> seen(seeds.begin(), seeds.end());
  std::vector<GroupTuple> work(seen.begin(), seen.end());
  while (!work.empty()) {
    GroupTuple t = std::move(work.back());
    work.pop_back();
    for (std::size_t h = 0; h < g.order(); ++h) {
      GroupTuple c(t.size());
      for (std::size_t k = 0; k < t.size(); ++k) c[k] = g.conj(t[k], static_cast<Elem>(h));
      if (seen.insert(c).second) work.push_back(std::move(c));
    }
  }
  return {seen.begin(), seen.end()};
}

std::uint64_t hom_count(const FiniteGroup& g, std::size_t ngens,
                        const std::vector<std::vector<int>>& relators, std::uint64_t budget) {
  std::atomic<std::uint64_t> visited{0};
  detail::HomSearch search(g, ngens, relators, budget, visited);
  return search.count(detail::HomSearch::Assignment(ngens, -1));
}

}  // namespace serial
}  // namespace tcd::kernels
