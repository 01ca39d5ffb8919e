#include "ringexp/ideal.hpp"

#include "ring_internal.hpp"
#include "ringexp/errors.hpp"

#include <algorithm>

namespace ringexp {

namespace {

void same_host(const Ideal& a, const Ideal& b, const char* op) {
  if (a.host() != b.host()) throw HostMismatch(std::string(op) + ": ideals live in different rings");
}

// Extends the additive subgroup `group` (given as list + set) by <x>.
void adjoin_cyclic(const FiniteRing& r, std::vector<Elem>& list, ElementSet& set, Elem x) {
  if (set.contains(x)) return;
  std::vector<Elem> multiples;
  for (Elem m = x; m != r.zero(); m = r.add(m, x)) multiples.push_back(m);
  const std::size_t base = list.size();
  for (std::size_t i = 0; i < base; ++i) {
    for (Elem m : multiples) {
      const Elem s = r.add(list[i], m);
      if (!set.contains(s)) {
        set.insert(s);
        list.push_back(s);
      }
    }
  }
}

}  // namespace

Ideal Ideal::validated(RingPtr host, ElementSet members) {
  const FiniteRing& r = *host;
  if (members.universe() != r.order()) throw ValidationError("ideal: element set has wrong universe");
  if (!members.contains(r.zero())) throw ValidationError("ideal: zero missing");
  const auto elems = members.elements();
  for (Elem a : elems) {
    if (!members.contains(r.neg(a))) throw ValidationError("ideal: not closed under negation at " + std::to_string(a));
    for (Elem b : elems) {
      if (!members.contains(r.add(a, b)))
        throw ValidationError("ideal: not closed under addition at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    for (Elem x = 0; x < r.order(); ++x) {
      if (!members.contains(r.mul(x, a)))
        throw ValidationError("ideal: does not absorb (" + std::to_string(x) + "," + std::to_string(a) + ")");
    }
  }
  return Ideal(std::move(host), std::move(members));
}

Ideal zero_ideal(const RingPtr& r) {
  ElementSet s(r->order());
  s.insert(r->zero());
  return Ideal::unchecked(r, std::move(s));
}

Ideal whole_ideal(const RingPtr& r) { return Ideal::unchecked(r, ElementSet::full(r->order())); }

Ideal principal_ideal(const RingPtr& r, Elem a) {
  ElementSet s(r->order());
  for (Elem x = 0; x < r->order(); ++x) s.insert(r->mul(x, a));
  return Ideal::unchecked(r, std::move(s));
}

Ideal ideal_generated(const RingPtr& r, std::span<const Elem> s) {
  Ideal acc = zero_ideal(r);
  for (Elem a : s) {
    if (!acc.contains(a)) acc = ideal_sum(acc, principal_ideal(r, a));
  }
  return acc;
}

std::vector<Elem> ideal_generators(const Ideal& i) {
  std::vector<Elem> gens;
  Ideal acc = zero_ideal(i.host());
  i.members().for_each([&](Elem a) {
    if (!acc.contains(a)) {
      acc = ideal_sum(acc, principal_ideal(i.host(), a));
      gens.push_back(a);
    }
  });
  return gens;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  same_host(a, b, "ideal_sum");
  if (b.subset_of(a)) return a;
  if (a.subset_of(b)) return b;
  const FiniteRing& r = *a.host();
  std::vector<Elem> list = a.elements();
  ElementSet set = a.members();
  b.members().for_each([&](Elem x) { adjoin_cyclic(r, list, set, x); });
  return Ideal::unchecked(a.host(), std::move(set));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  same_host(a, b, "ideal_product");
  const FiniteRing& r = *a.host();
  // IJ is generated as an ideal by products of ideal generators.
  const auto ga = ideal_generators(a);
  const auto gb = ideal_generators(b);
  Ideal acc = zero_ideal(a.host());
  for (Elem x : ga)
    for (Elem y : gb) {
      const Elem p = r.mul(x, y);
      if (!acc.contains(p)) acc = ideal_sum(acc, principal_ideal(a.host(), p));
    }
  return acc;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  same_host(a, b, "ideal_intersect");
  return Ideal::unchecked(a.host(), a.members() & b.members());
}

Ideal radical(const Ideal& i) {
  const FiniteRing& r = *i.host();
  ElementSet out(r.order());
  std::vector<bool> seen;
  for (Elem x = 0; x < r.order(); ++x) {
    // walk x, x^2, ... until a power lands in I or repeats
    seen.assign(r.order(), false);
    for (Elem p = x; !seen[p]; p = r.mul(p, x)) {
      if (i.contains(p)) {
        out.insert(x);
        break;
      }
      seen[p] = true;
    }
  }
  return Ideal::unchecked(i.host(), std::move(out));
}

Ideal annihilator(const Ideal& i) {
  const FiniteRing& r = *i.host();
  const auto gens = ideal_generators(i);
  ElementSet out(r.order());
  for (Elem a = 0; a < r.order(); ++a) {
    bool kills = true;
    for (Elem g : gens) {
      if (r.mul(a, g) != r.zero()) {
        kills = false;
        break;
      }
    }
    if (kills) out.insert(a);
  }
  return Ideal::unchecked(i.host(), std::move(out));
}

bool is_prime(const Ideal& i) {
  if (i.is_whole()) throw DomainError("is_prime: the whole ring is not a proper ideal");
  const FiniteRing& r = *i.host();
  std::vector<Elem> outside;
  for (Elem a = 0; a < r.order(); ++a)
    if (!i.contains(a)) outside.push_back(a);
  for (std::size_t x = 0; x < outside.size(); ++x)
    for (std::size_t y = x; y < outside.size(); ++y)
      if (i.contains(r.mul(outside[x], outside[y]))) return false;
  return true;
}

Ideal image(const RingAutomorphism& alpha, const Ideal& i) {
  if (alpha.host() != i.host()) throw HostMismatch("image: automorphism and ideal live in different rings");
  ElementSet out(i.host()->order());
  i.members().for_each([&](Elem a) { out.insert(alpha(a)); });
  return Ideal::unchecked(i.host(), std::move(out));
}

Ideal preimage(const RingAutomorphism& alpha, const Ideal& i) {
  if (alpha.host() != i.host()) throw HostMismatch("preimage: automorphism and ideal live in different rings");
  ElementSet out(i.host()->order());
  for (Elem a = 0; a < i.host()->order(); ++a)
    if (i.contains(alpha(a))) out.insert(a);
  return Ideal::unchecked(i.host(), std::move(out));
}

ElementSet idempotent_elements(const FiniteRing& r) {
  ElementSet out(r.order());
  for (Elem e = 0; e < r.order(); ++e)
    if (r.mul(e, e) == e) out.insert(e);
  return out;
}

std::vector<Elem> primitive_orthogonal_idempotents(const FiniteRing& r) {
  if (r.is_trivial()) return {};
  const auto idem = idempotent_elements(r).elements();
  std::vector<Elem> parts{r.one()};
  bool split = true;
  while (split) {
    split = false;
    for (std::size_t k = 0; k < parts.size() && !split; ++k) {
      const Elem e = parts[k];
      for (Elem f : idem) {
        if (f == r.zero() || f == e || r.mul(f, e) != f) continue;
        parts[k] = f;
        parts.push_back(r.sub(e, f));
        split = true;
        break;
      }
    }
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

Quotient make_quotient(const Ideal& i) {
  const RingPtr& base = i.host();
  const FiniteRing& r = *base;
  Ideal::validated(base, i.members());
  const std::size_t n = r.order();
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> proj(n, unset);
  std::vector<Elem> reps;
  const auto members = i.elements();
  for (Elem a = 0; a < n; ++a) {
    if (proj[a] != unset) continue;
    const Elem idx = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem m : members) proj[r.add(a, m)] = idx;
  }
  const std::size_t q = reps.size();
  FiniteRing::Tables t;
  t.order = q;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) {
      t.add[x * q + y] = proj[r.add(reps[x], reps[y])];
      t.mul[x * q + y] = proj[r.mul(reps[x], reps[y])];
    }
  t.zero = proj[r.zero()];
  t.one = proj[r.one()];
  Recipe recipe{Recipe::Kind::quotient, 0, {}, {r.recipe()}, ideal_generators(i)};
  auto ring = finish_ring(std::move(t), std::move(recipe));
  attach_quotient(*ring, base, reps);
  return Quotient{ring, std::move(proj), i};
}

RingAutomorphism induced_automorphism(const RingAutomorphism& alpha, const Quotient& q) {
  if (alpha.host() != q.kernel.host()) throw HostMismatch("induced automorphism: host mismatch");
  if (image(alpha, q.kernel) != q.kernel) throw DomainError("induced automorphism: ideal is not invariant");
  const FiniteRing& qr = *q.ring;
  std::vector<Elem> img(qr.order());
  for (Elem x = 0; x < qr.order(); ++x) img[x] = q.projection[alpha(qr.representative(x))];
  return RingAutomorphism::make(q.ring, std::move(img));
}

}  // namespace ringexp
