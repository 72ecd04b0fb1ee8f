#include "cubature/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace cub {

bool SteinerSystem::validate() const {
  std::map<std::vector<int>, int> hits;
  for (const auto& b : blocks) {
    if (static_cast<int>(b.size()) != k) return false;
    // all t-subsets of the block
    std::vector<int> idx(t);
    std::function<void(int, int)> rec = [&](int pos, int start) {
      if (pos == t) {
        std::vector<int> s;
        for (int i : idx) s.push_back(b[i]);
        ++hits[s];
        return;
      }
      for (int i = start; i < k; ++i) {
        idx[pos] = i;
        rec(pos + 1, i + 1);
      }
    };
    rec(0, 0);
  }
  for (const auto& [s, c] : hits)
    if (c != 1) return false;
  return static_cast<long>(hits.size()) == binomial(v, t).get_si();
}

SteinerSystem steiner(int t, int k, int v) {
  SteinerSystem s{t, k, v, {}};
  if (t == 3 && k == 4 && v == 8) {
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        for (int c = b + 1; c < 8; ++c) {
          int d = a ^ b ^ c;
          if (d > c) s.blocks.push_back({a, b, c, d});
        }
  } else if (t == 5 && k == 6 && v == 12) {
    const int inf = 11;
    auto mod = [](long x) { return static_cast<int>(((x % 11) + 11) % 11); };
    auto inv = [&](int x) {
      for (int y = 1; y < 11; ++y)
        if (mod(static_cast<long>(x) * y) == 1) return y;
      return 0;
    };
    std::vector<std::function<int(int)>> gens = {
        [&](int x) { return x == inf ? inf : mod(x + 1); },
        [&](int x) { return x == inf ? 0 : (x == 0 ? inf : mod(-inv(x))); },
        [&](int x) { return x == inf ? inf : mod(4L * x); },
    };
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier = {{1, 3, 4, 5, 9, inf}};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& b : frontier)
        for (const auto& g : gens) {
          std::vector<int> c;
          for (int x : b) c.push_back(g(x));
          std::sort(c.begin(), c.end());
          if (seen.insert(c).second) next.push_back(c);
        }
      frontier = std::move(next);
    }
    s.blocks.assign(seen.begin(), seen.end());
  } else {
    throw std::invalid_argument("unsupported Steiner system S(" + std::to_string(t) + "," + std::to_string(k) + "," +
                                std::to_string(v) + ")");
  }
  if (!s.validate()) throw std::logic_error("Steiner construction failed validation");
  return s;
}

}  // namespace cub
