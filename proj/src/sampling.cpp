#include "skeleta/sampling.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace skeleta {

SkeletonPoint random_interior_point(const DualComplex& dc, const std::string& stratum,
                                    std::mt19937_64& rng, long max_denominator) {
  const auto& s = dc.simplex(stratum);
  const long n = static_cast<long>(s.vertices.size());
  const long q = std::uniform_int_distribution<long>(n, std::max(n, max_denominator))(rng);
  // n - 1 distinct cuts in 1..q-1 split q into n positive parts.
  std::vector<long> slots(static_cast<std::size_t>(q - 1));
  std::iota(slots.begin(), slots.end(), 1);
  std::vector<long> cuts;
  std::sample(slots.begin(), slots.end(), std::back_inserter(cuts), n - 1, rng);
  cuts.push_back(q);
  SkeletonPoint p{stratum, {}};
  long prev = 0;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    Rational b(cuts[i] - prev, q);
    b.canonicalize();
    p.barycentric.emplace(s.vertices[i], b);
    prev = cuts[i];
  }
  return p;
}

std::vector<SkeletonPoint> interior_grid(const DualComplex& dc, const std::string& stratum,
                                         long max_denominator) {
  const auto& s = dc.simplex(stratum);
  const std::size_t n = s.vertices.size();
  std::set<std::map<std::string, Rational>> seen;
  std::vector<SkeletonPoint> out;
  std::vector<long> parts(n);
  for (long q = static_cast<long>(n); q <= std::max<long>(max_denominator, 1); ++q) {
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
      if (i + 1 == n) {
        parts[i] = left;
        std::map<std::string, Rational> b;
        for (std::size_t k = 0; k < n; ++k) {
          Rational r(parts[k], q);
          r.canonicalize();
          b.emplace(s.vertices[k], r);
        }
        if (seen.insert(b).second) out.push_back({stratum, std::move(b)});
        return;
      }
      for (long v = 1; v <= left - static_cast<long>(n - i - 1); ++v) {
        parts[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, q);
  }
  return out;
}

}  // namespace skeleta
