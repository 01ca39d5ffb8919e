#include "ringexp/isomorphism.hpp"

#include "ringexp/automorphism.hpp"
#include "ringexp/errors.hpp"

namespace ringexp {

std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b, std::size_t max_guesses) {
  const std::size_t n = a.order();
  if (b.order() != n) return std::nullopt;
  if (a.characteristic() != b.characteristic()) return std::nullopt;

  std::vector<Elem> gens;
  ElementSet closed = subring_closure(a, gens);
  for (Elem x = 0; x < n && closed.count() < n; ++x) {
    if (!closed.contains(x)) {
      gens.push_back(x);
      closed = subring_closure(a, gens);
    }
  }
  std::size_t space = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    space *= n;
    if (space > max_guesses) throw CapacityError("isomorphism search space too large");
  }

  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> images(gens.size(), 0);
  std::vector<Elem> map;
  std::vector<Elem> known;
  while (true) {
    map.assign(n, unset);
    known.clear();
    bool ok = true;
    auto assign = [&](Elem x, Elem fx) {
      if (map[x] == unset) {
        map[x] = fx;
        known.push_back(x);
        return true;
      }
      return map[x] == fx;
    };
    ok = assign(a.zero(), b.zero()) && assign(a.one(), b.one());
    for (std::size_t i = 0; ok && i < gens.size(); ++i) ok = assign(gens[i], images[i]);
    for (std::size_t i = 0; ok && i < known.size(); ++i) {
      for (std::size_t j = 0; ok && j <= i; ++j) {
        const Elem x = known[i], y = known[j];
        ok = assign(a.add(x, y), b.add(map[x], map[y])) && assign(a.mul(x, y), b.mul(map[x], map[y]));
      }
    }
    if (ok && known.size() == n) {
      std::vector<bool> hit(n, false);
      for (Elem v : map) {
        if (hit[v]) {
          ok = false;
          break;
        }
        hit[v] = true;
      }
      if (ok) {
        for (Elem x = 0; ok && x < n; ++x)
          for (Elem y = 0; ok && y < n; ++y)
            ok = map[a.add(x, y)] == b.add(map[x], map[y]) && map[a.mul(x, y)] == b.mul(map[x], map[y]);
        if (ok) return map;
      }
    }
    std::size_t i = 0;
    for (; i < images.size(); ++i) {
      if (++images[i] < n) break;
      images[i] = 0;
    }
    if (i == images.size()) break;
  }
  return std::nullopt;
}

}  // namespace ringexp
