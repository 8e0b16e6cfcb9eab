#include "patcount/compositions.hpp"

#include <stdexcept>

namespace patcount {

std::vector<Composition> enumerate_compositions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_compositions: n < 1");
  std::vector<Composition> out;
  Composition cur;
  // Depth-first with parts tried in increasing order gives lexicographic
  // order by parts.
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= rest; ++p) {
      cur.push_back(p);
      self(self, rest - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

BigInt composition_stat(CompositionStat kind, int n) {
  if (n < 1) throw std::invalid_argument("composition_stat: n < 1");
  const BigInt p = pow2(n);
  switch (kind) {
    case CompositionStat::a:
      return p - 1;
    case CompositionStat::b:
      return 2 * p - 2 * n - 2;
    case CompositionStat::c:
      // (n+1) 2^{n-2}, division last so n = 1 stays exact.
      return exact_div(BigInt(n + 1) * p, 4);
    case CompositionStat::d:
      // (n^2+n-2) 2^{n-3} = (n-1)(n+2) 2^{n-3}
      return exact_div(BigInt(n - 1) * (n + 2) * p, 8);
  }
  throw std::logic_error("composition_stat: bad kind");
}

BigInt composition_stat_brute(CompositionStat kind, int n) {
  BigInt total = 0;
  for (const Composition& c : enumerate_compositions(n)) {
    const long long k = static_cast<long long>(c.size());
    const long long last = c.back();
    switch (kind) {
      case CompositionStat::a: total += last; break;
      case CompositionStat::b: total += last * (last - 1); break;
      case CompositionStat::c: total += k; break;
      case CompositionStat::d: total += k * (k - 1); break;
    }
  }
  return total;
}

}  // namespace patcount
