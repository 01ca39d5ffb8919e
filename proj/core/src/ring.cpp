#include "ringexp/ring.hpp"

#include "ringexp/errors.hpp"

#include <random>
#include <sstream>

namespace ringexp {

class RingBuilder {
 public:
  static std::shared_ptr<FiniteRing> finish(FiniteRing::Tables t, Recipe recipe) {
    auto r = std::shared_ptr<FiniteRing>(new FiniteRing());
    r->n_ = t.order;
    r->add_ = std::move(t.add);
    r->mul_ = std::move(t.mul);
    r->zero_ = t.zero;
    r->one_ = t.one;
    r->recipe_ = std::move(recipe);
    r->neg_.assign(r->n_, 0);
    for (Elem a = 0; a < r->n_; ++a) {
      for (Elem b = 0; b < r->n_; ++b) {
        if (r->add(a, b) == r->zero_) {
          r->neg_[a] = b;
          break;
        }
      }
    }
    return r;
  }
  static void set_factors(FiniteRing& r, std::vector<RingPtr> f) { r.factors_ = std::move(f); }
  static void set_quotient(FiniteRing& r, RingPtr base, std::vector<Elem> reps) {
    r.base_ = std::move(base);
    r.reps_ = std::move(reps);
  }
};

// Quotient construction lives with ideals but needs builder access.
std::shared_ptr<FiniteRing> finish_ring(FiniteRing::Tables t, Recipe recipe) {
  return RingBuilder::finish(std::move(t), std::move(recipe));
}
void attach_quotient(FiniteRing& r, RingPtr base, std::vector<Elem> reps) {
  RingBuilder::set_quotient(r, std::move(base), std::move(reps));
}

namespace {

void check_order(std::size_t order, const Bounds& bounds) {
  if (order == 0) throw ValidationError("ring order must be positive");
  if (order > bounds.max_order) {
    throw CapacityError("ring order " + std::to_string(order) + " exceeds bound " +
                        std::to_string(bounds.max_order));
  }
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string Recipe::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::cyclic:
      os << "Z/" << modulus;
      break;
    case Kind::poly_quotient: {
      os << "F" << modulus << "[x]/(";
      bool first = true;
      for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || coeffs[i] != 1) os << coeffs[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
      }
      os << ")";
      break;
    }
    case Kind::product:
      for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " x " : "") << parts[i].describe();
      break;
    case Kind::quotient:
      os << "(" << (parts.empty() ? std::string("?") : parts[0].describe()) << ")/(";
      for (std::size_t i = 0; i < ideal_generators.size(); ++i) os << (i ? "," : "") << ideal_generators[i];
      os << ")";
      break;
    case Kind::explicit_tables:
      os << "explicit";
      break;
  }
  return os.str();
}

RingPtr FiniteRing::from_tables(Tables t, Recipe recipe) {
  if (t.order == 0) throw ValidationError("ring order must be positive");
  const std::size_t n = t.order;
  if (t.add.size() != n * n || t.mul.size() != n * n) throw ValidationError("table size does not match order");
  if (t.zero >= n || t.one >= n) throw ValidationError("zero/one outside element range");
  for (Elem v : t.add)
    if (v >= n) throw ValidationError("addition table entry out of range");
  for (Elem v : t.mul)
    if (v >= n) throw ValidationError("multiplication table entry out of range");
  auto r = RingBuilder::finish(std::move(t), std::move(recipe));
  if (auto bad = find_axiom_violation(*r)) throw ValidationError(*bad);
  return r;
}

Elem FiniteRing::pow(Elem a, std::uint64_t e) const {
  Elem result = one_;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem FiniteRing::scale(Elem a, std::uint64_t k) const {
  Elem result = zero_;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = add(result, base);
    base = add(base, base);
    k >>= 1;
  }
  return result;
}

std::uint32_t FiniteRing::characteristic() const {
  std::uint32_t c = 1;
  for (Elem x = one_; x != zero_; x = add(x, one_)) ++c;
  return c;
}

std::vector<Elem> FiniteRing::split(Elem a) const {
  std::vector<Elem> coords(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto m = static_cast<Elem>(factors_[i]->order());
    coords[i] = a % m;
    a /= m;
  }
  return coords;
}

Elem FiniteRing::join(std::span<const Elem> coords) const {
  Elem idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * static_cast<Elem>(factors_[i]->order()) + coords[i];
  return idx;
}

std::string FiniteRing::label(Elem a) const {
  std::ostringstream os;
  switch (recipe_.kind) {
    case Recipe::Kind::poly_quotient: {
      const std::uint32_t p = recipe_.modulus;
      const std::size_t d = recipe_.coeffs.size() - 1;
      os << "[";
      Elem v = a;
      for (std::size_t i = 0; i < d; ++i) {
        os << (i ? "," : "") << v % p;
        v /= p;
      }
      os << "]";
      break;
    }
    case Recipe::Kind::product: {
      auto c = split(a);
      os << "(";
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << factors_[i]->label(c[i]);
      os << ")";
      break;
    }
    case Recipe::Kind::quotient:
      os << base_->label(reps_[a]);
      break;
    default:
      os << a;
  }
  return os.str();
}

std::optional<std::string> find_axiom_violation(const FiniteRing& r, std::uint64_t seed) {
  const std::size_t n = r.order();
  const Elem z = r.zero();
  const Elem o = r.one();
  auto pair_msg = [](const char* law, Elem a, Elem b) {
    return std::string(law) + " fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  for (Elem a = 0; a < n; ++a) {
    if (r.add(a, z) != a) return pair_msg("additive identity", a, z);
    if (r.mul(a, o) != a) return pair_msg("multiplicative identity", a, o);
    if (r.add(a, r.neg(a)) != z) return pair_msg("additive inverse", a, r.neg(a));
    for (Elem b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return pair_msg("additive commutativity", a, b);
      if (r.mul(a, b) != r.mul(b, a)) return pair_msg("multiplicative commutativity", a, b);
    }
  }
  auto check_triple = [&](Elem a, Elem b, Elem c) -> std::optional<std::string> {
    const std::string at = " fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "additive associativity" + at;
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplicative associativity" + at;
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "distributivity" + at;
    return std::nullopt;
  };
  if (n <= 256) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (auto bad = check_triple(a, b, c)) return bad;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (int i = 0; i < 200000; ++i)
      if (auto bad = check_triple(pick(rng), pick(rng), pick(rng))) return bad;
  }
  return std::nullopt;
}

RingPtr make_cyclic(std::uint32_t n, const Bounds& bounds) {
  check_order(n, bounds);
  FiniteRing::Tables t;
  t.order = n;
  t.add.resize(static_cast<std::size_t>(n) * n);
  t.mul.resize(static_cast<std::size_t>(n) * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<Elem>((a + b) % n);
      t.mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  t.zero = 0;
  t.one = static_cast<Elem>(1 % n);
  return RingBuilder::finish(std::move(t), Recipe{Recipe::Kind::cyclic, n, {}, {}, {}});
}

RingPtr make_poly_quotient(std::uint32_t p, std::vector<std::uint32_t> f, const Bounds& bounds) {
  if (!is_prime_number(p)) throw ValidationError("poly_quotient: modulus " + std::to_string(p) + " is not prime");
  if (f.size() < 2) throw ValidationError("poly_quotient: polynomial must have degree at least 1");
  for (auto& c : f) {
    if (c >= p) throw ValidationError("poly_quotient: coefficient out of range for F_" + std::to_string(p));
  }
  if (f.back() != 1) throw ValidationError("poly_quotient: polynomial is not monic");
  const std::size_t d = f.size() - 1;
  std::size_t order = 1;
  for (std::size_t i = 0; i < d; ++i) {
    order *= p;
    if (order > bounds.max_order) {
      throw CapacityError("poly_quotient: p^deg exceeds order bound " + std::to_string(bounds.max_order));
    }
  }
  check_order(order, bounds);

  auto digits = [&](std::size_t idx) {
    std::vector<std::uint32_t> c(d);
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = static_cast<std::uint32_t>(idx % p);
      idx /= p;
    }
    return c;
  };
  auto index = [&](const std::vector<std::uint32_t>& c) {
    std::size_t idx = 0;
    for (std::size_t i = d; i-- > 0;) idx = idx * p + c[i];
    return static_cast<Elem>(idx);
  };

  FiniteRing::Tables t;
  t.order = order;
  t.add.resize(order * order);
  t.mul.resize(order * order);
  std::vector<Elem> times_x(order);
  std::vector<Elem> scaled(order * p);
  for (std::size_t a = 0; a < order; ++a) {
    const auto ca = digits(a);
    for (std::size_t b = 0; b < order; ++b) {
      const auto cb = digits(b);
      std::vector<std::uint32_t> s(d);
      for (std::size_t i = 0; i < d; ++i) s[i] = (ca[i] + cb[i]) % p;
      t.add[a * order + b] = index(s);
    }
    // x * a, reducing x^d = -(f_0 + ... + f_{d-1} x^{d-1}).
    std::vector<std::uint32_t> sx(d, 0);
    const std::uint32_t top = ca[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) sx[i] = ca[i - 1];
    sx[0] = 0;
    for (std::size_t i = 0; i < d; ++i) sx[i] = (sx[i] + (p - (top * f[i]) % p)) % p;
    times_x[a] = index(sx);
    for (std::uint32_t k = 0; k < p; ++k) {
      std::vector<std::uint32_t> sk(d);
      for (std::size_t i = 0; i < d; ++i) sk[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(ca[i]) * k) % p);
      scaled[a * p + k] = index(sk);
    }
  }
  // a * b with b = b_0 + x b': a*b = b_0 a + x (a b'); b' = b / p < b.
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t b0 = b % p;
      const std::size_t rest = b / p;
      const Elem low = scaled[a * p + b0];
      if (rest == 0) {
        t.mul[a * order + b] = low;
      } else {
        const Elem high = times_x[t.mul[a * order + rest]];
        t.mul[a * order + b] = t.add[static_cast<std::size_t>(low) * order + high];
      }
    }
  }
  t.zero = 0;
  t.one = (order == 1) ? 0 : 1;
  return RingBuilder::finish(std::move(t), Recipe{Recipe::Kind::poly_quotient, p, std::move(f), {}, {}});
}

RingPtr make_product(std::span<const RingPtr> factors, const Bounds& bounds) {
  if (factors.empty()) throw ValidationError("product: factor list is empty");
  std::size_t order = 1;
  for (const auto& f : factors) {
    order *= f->order();
    if (order > bounds.max_order) {
      throw CapacityError("product order exceeds bound " + std::to_string(bounds.max_order));
    }
  }
  check_order(order, bounds);
  const std::size_t k = factors.size();
  std::vector<std::vector<Elem>> coords(order, std::vector<Elem>(k));
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::size_t v = idx;
    for (std::size_t i = k; i-- > 0;) {
      coords[idx][i] = static_cast<Elem>(v % factors[i]->order());
      v /= factors[i]->order();
    }
  }
  auto join = [&](const std::vector<Elem>& c) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * factors[i]->order() + c[i];
    return static_cast<Elem>(idx);
  };
  FiniteRing::Tables t;
  t.order = order;
  t.add.resize(order * order);
  t.mul.resize(order * order);
  std::vector<Elem> s(k), m(k);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < k; ++i) {
        s[i] = factors[i]->add(coords[a][i], coords[b][i]);
        m[i] = factors[i]->mul(coords[a][i], coords[b][i]);
      }
      t.add[a * order + b] = join(s);
      t.mul[a * order + b] = join(m);
    }
  }
  std::vector<Elem> zeros(k), ones(k);
  for (std::size_t i = 0; i < k; ++i) {
    zeros[i] = factors[i]->zero();
    ones[i] = factors[i]->one();
  }
  t.zero = join(zeros);
  t.one = join(ones);
  Recipe recipe{Recipe::Kind::product, 0, {}, {}, {}};
  for (const auto& f : factors) recipe.parts.push_back(f->recipe());
  auto r = RingBuilder::finish(std::move(t), std::move(recipe));
  RingBuilder::set_factors(*r, std::vector<RingPtr>(factors.begin(), factors.end()));
  return r;
}

RingPtr make_product(std::initializer_list<RingPtr> factors, const Bounds& bounds) {
  return make_product(std::span<const RingPtr>(factors.begin(), factors.size()), bounds);
}

}  // namespace ringexp
