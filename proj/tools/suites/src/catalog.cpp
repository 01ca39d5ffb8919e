#include "ringexp/suites/catalog.hpp"

#include "ringexp/errors.hpp"
#include "ringexp/ideal.hpp"
#include "ringexp/lattice.hpp"
#include "ringexp/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace ringexp::suites {

Bounds suite_bounds() {
  Bounds b;
  b.max_automorphism_search = 64;
  return b;
}

namespace {

RingPtr poly(std::uint32_t p, std::vector<std::uint32_t> f) { return make_poly_quotient(p, std::move(f)); }
RingPtr cyc(std::uint32_t n) { return make_cyclic(n); }

// cheap isomorphism invariants: order, characteristic, #idempotents, #units,
// #nilpotents, #squares
using Signature = std::tuple<std::size_t, std::uint32_t, std::size_t, std::size_t, std::size_t, std::size_t>;

Signature signature(const FiniteRing& r) {
  const auto n = r.order();
  std::size_t units = 0, nil = 0;
  std::vector<bool> square(n, false);
  for (Elem a = 0; a < n; ++a) {
    square[r.mul(a, a)] = true;
    bool unit = false;
    for (Elem b = 0; b < n && !unit; ++b) unit = r.mul(a, b) == r.one();
    units += unit;
    nil += r.pow(a, n) == r.zero();
  }
  return {n, r.characteristic(), idempotent_elements(r).count(), units, nil,
          static_cast<std::size_t>(std::count(square.begin(), square.end(), true))};
}

}  // namespace

std::vector<NamedRing> catalog_rings() {
  std::vector<NamedRing> out = {
      {"F4", poly(2, {1, 1, 1})},
      {"F2[x]/(x^2)", poly(2, {0, 0, 1})},
      {"F2[x]/(x^2+1)", poly(2, {1, 0, 1})},
      {"F2[x]/(x^2+x)", poly(2, {0, 1, 1})},
      {"F9", poly(3, {1, 0, 1})},
      {"F3[x]/(x^2)", poly(3, {0, 0, 1})},
      {"F8", poly(2, {1, 1, 0, 1})},
      {"F2[x]/(x^3)", poly(2, {0, 0, 0, 1})},
      {"F3[x]/(x^3)", poly(3, {0, 0, 0, 1})},
      {"F25", poly(5, {2, 0, 1})},
      {"F2^2", make_product({cyc(2), cyc(2)})},
      {"F2^3", make_product({cyc(2), cyc(2), cyc(2)})},
      {"F2^4", make_product({cyc(2), cyc(2), cyc(2), cyc(2)})},
      {"F4xF4", make_product({poly(2, {1, 1, 1}), poly(2, {1, 1, 1})})},
      {"Z4xZ4", make_product({cyc(4), cyc(4)})},
      {"F2xZ4", make_product({cyc(2), cyc(4)})},
      {"F3xF3", make_product({cyc(3), cyc(3)})},
      {"Z4xF2[x]/(x^2)", make_product({cyc(4), poly(2, {0, 0, 1})})},
      {"F4xF2", make_product({poly(2, {1, 1, 1}), cyc(2)})},
      {"Z9xF3", make_product({cyc(9), cyc(3)})},
      {"Z8xF2", make_product({cyc(8), cyc(2)})},
  };
  const auto z44 = make_product({cyc(4), cyc(4)});
  const Elem two_two = z44->join(std::vector<Elem>{2, 2});
  out.push_back({"(Z4xZ4)/((2,2))", make_quotient(principal_ideal(z44, two_two)).ring});
  return out;
}

std::vector<NamedRing> cyclic_rings(std::uint32_t lo, std::uint32_t hi) {
  std::vector<NamedRing> out;
  for (std::uint32_t n = lo; n <= hi; ++n) out.push_back({"Z/" + std::to_string(n), cyc(n)});
  return out;
}

std::vector<NamedRing> catalog_with_cyclic(std::uint32_t hi) {
  auto out = catalog_rings();
  for (auto& r : cyclic_rings(2, hi)) out.push_back(std::move(r));
  return out;
}

RingPtr truncated_polynomials(std::uint32_t n, std::uint32_t q, std::size_t vars, std::size_t d) {
  if (n < 2 || q < 2 || n % q != 0 || vars == 0 || d < 1) throw DomainError("truncated_polynomials: bad parameters");
  // monomials of total degree < d, degree 0 first
  std::vector<std::vector<std::size_t>> mono{std::vector<std::size_t>(vars, 0)};
  for (std::size_t i = 0; i < mono.size(); ++i) {
    std::size_t deg = 0;
    for (auto e : mono[i]) deg += e;
    if (deg + 1 >= d) continue;
    for (std::size_t v = 0; v < vars; ++v) {
      auto m = mono[i];
      ++m[v];
      if (std::find(mono.begin(), mono.end(), m) == mono.end()) mono.push_back(m);
    }
  }
  const std::size_t k = mono.size();
  std::vector<std::uint32_t> radix(k, q);
  radix[0] = n;
  std::size_t order = 1;
  for (auto r : radix) {
    order *= r;
    if (order > 4096) throw CapacityError("truncated_polynomials: order above 4096");
  }
  std::vector<int> times(k * k, -1);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto m = mono[a];
      for (std::size_t v = 0; v < vars; ++v) m[v] += mono[b][v];
      auto it = std::find(mono.begin(), mono.end(), m);
      if (it != mono.end()) times[a * k + b] = static_cast<int>(it - mono.begin());
    }
  auto decode = [&](std::size_t x) {
    std::vector<std::uint32_t> c(k);
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = static_cast<std::uint32_t>(x % radix[i]);
      x /= radix[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<std::uint64_t>& c) {
    std::size_t x = 0;
    for (std::size_t i = k; i-- > 0;) x = x * radix[i] + c[i] % radix[i];
    return static_cast<Elem>(x);
  };
  std::vector<std::vector<std::uint32_t>> coeffs(order);
  for (std::size_t x = 0; x < order; ++x) coeffs[x] = decode(x);
  FiniteRing::Tables t;
  t.order = order;
  t.add.resize(order * order);
  t.mul.resize(order * order);
  std::vector<std::uint64_t> acc(k);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      for (std::size_t i = 0; i < k; ++i) acc[i] = coeffs[x][i] + coeffs[y][i];
      t.add[x * order + y] = encode(acc);
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          if (times[a * k + b] >= 0) acc[static_cast<std::size_t>(times[a * k + b])] += std::uint64_t{coeffs[x][a]} * coeffs[y][b];
      t.mul[x * order + y] = encode(acc);
    }
  t.zero = 0;
  t.one = 1;
  return FiniteRing::from_tables(std::move(t));
}

RingPtr polynomials_mod(std::uint32_t n, std::vector<std::uint32_t> f) {
  if (n < 2 || f.size() < 2 || f.back() != 1) throw DomainError("polynomials_mod: f must be monic of degree >= 1");
  const std::size_t d = f.size() - 1;
  std::size_t order = 1;
  for (std::size_t i = 0; i < d; ++i) {
    order *= n;
    if (order > 4096) throw CapacityError("polynomials_mod: order above 4096");
  }
  auto decode = [&](std::size_t x) {
    std::vector<std::uint64_t> c(d);
    for (std::size_t i = 0; i < d; ++i, x /= n) c[i] = x % n;
    return c;
  };
  auto encode = [&](const std::vector<std::uint64_t>& c) {
    std::size_t x = 0;
    for (std::size_t i = d; i-- > 0;) x = x * n + c[i] % n;
    return static_cast<Elem>(x);
  };
  FiniteRing::Tables t;
  t.order = order;
  t.add.resize(order * order);
  t.mul.resize(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const auto a = decode(x), b = decode(y);
      std::vector<std::uint64_t> s(d), p(2 * d, 0);
      for (std::size_t i = 0; i < d; ++i) s[i] = a[i] + b[i];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p[i + j] = (p[i + j] + a[i] * b[j]) % n;
      // x^d = -(f_0 + ... + f_{d-1} x^{d-1})
      for (std::size_t i = 2 * d; i-- > d;) {
        const std::uint64_t top = p[i] % n;
        p[i] = 0;
        for (std::size_t j = 0; j < d; ++j) p[i - d + j] = (p[i - d + j] + (n - f[j] % n) * top) % n;
      }
      t.add[x * order + y] = encode(s);
      p.resize(d);
      t.mul[x * order + y] = encode(p);
    }
  t.zero = 0;
  t.one = 1;
  return FiniteRing::from_tables(std::move(t));
}

std::size_t known_ring_count(std::size_t n) {
  static const std::size_t counts[] = {0, 1, 1, 1, 4, 1, 1, 1, 10, 4, 1, 1, 4, 1, 1, 1, 37};
  if (n == 0 || n > 16) throw DomainError("known_ring_count: order outside 1..16");
  return counts[n];
}

std::vector<NamedRing> small_ring_corpus(std::size_t max_order) {
  if (max_order > 16) throw DomainError("small_ring_corpus: orders above 16 are not classified here");
  std::vector<NamedRing> atoms;
  for (std::uint32_t n = 2; n <= max_order; ++n) atoms.push_back({"Z/" + std::to_string(n), cyc(n)});
  for (std::uint32_t p = 2; p * p <= max_order; ++p) {
    if (!is_prime_number(p)) continue;
    std::size_t pd = p * p;
    for (std::size_t d = 2; pd <= max_order; ++d, pd *= p) {
      // every monic f of degree d: coefficients c_0..c_{d-1} in mixed radix
      for (std::size_t code = 0; code < pd; ++code) {
        std::vector<std::uint32_t> f(d + 1, 0);
        std::string name = "F" + std::to_string(p) + "[x]/(";
        std::size_t c = code;
        for (std::size_t i = 0; i < d; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
        f[d] = 1;
        for (std::size_t i = f.size(); i-- > 0;) name += std::to_string(f[i]);
        atoms.push_back({name + ")", poly(p, f)});
      }
    }
  }
  if (max_order >= 16) atoms.push_back({"Z4[x]/(x^2+x+1)", polynomials_mod(4, {1, 1, 1})});
  // quotients of truncated polynomial rings reach the remaining local rings
  struct Base {
    std::uint32_t n, q;
    std::size_t vars, d;
  };
  for (const Base& b : {Base{4, 4, 1, 4}, Base{8, 8, 1, 3}, Base{4, 2, 2, 3}, Base{2, 2, 2, 3}, Base{2, 2, 3, 2}}) {
    const auto base = truncated_polynomials(b.n, b.q, b.vars, b.d);
    const std::string name = "Z" + std::to_string(b.n) + "[" + std::to_string(b.vars) + " vars]/(deg " +
                             std::to_string(b.d) + (b.q != b.n ? ", " + std::to_string(b.q) + "x" : "") + ")";
    for (const auto& i : enumerate_ideals(base)) {
      const std::size_t order = base->order() / i.count();
      if (order < 2 || order > max_order) continue;
      atoms.push_back({name + " mod " + std::to_string(i.count()) + "-element ideal", make_quotient(i).ring});
    }
  }

  std::map<Signature, std::vector<std::size_t>> classes;
  auto add_class = [&](std::vector<NamedRing>& out, NamedRing r) {
    auto& bucket = classes[signature(*r.ring)];
    const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                  [&](std::size_t j) { return are_isomorphic(*out[j].ring, *r.ring); });
    if (seen) return;
    bucket.push_back(out.size());
    out.push_back(std::move(r));
  };
  std::vector<NamedRing> out;
  for (auto& r : atoms) add_class(out, std::move(r));
  const std::vector<NamedRing> singles = out;

  std::function<void(std::size_t, std::vector<std::size_t>&, std::size_t)> grow =
      [&](std::size_t from, std::vector<std::size_t>& pick, std::size_t order) {
        if (pick.size() >= 2) {
          std::vector<RingPtr> parts;
          std::string name;
          for (auto i : pick) {
            parts.push_back(singles[i].ring);
            name += (name.empty() ? "" : " x ") + singles[i].name;
          }
          add_class(out, {name, make_product(parts)});
        }
        for (std::size_t i = from; i < singles.size(); ++i) {
          const std::size_t next = order * singles[i].ring->order();
          if (next > max_order) continue;
          pick.push_back(i);
          grow(i, pick, next);
          pick.pop_back();
        }
      };
  std::vector<std::size_t> pick;
  grow(0, pick, 1);
  std::stable_sort(out.begin(), out.end(),
                   [](const NamedRing& a, const NamedRing& b) { return a.ring->order() < b.ring->order(); });
  return out;
}

std::vector<RingAutomorphism> automorphisms_of(const RingPtr& r) { return enumerate_automorphisms(r, suite_bounds()); }

}  // namespace ringexp::suites
