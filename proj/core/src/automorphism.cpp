#include "ringexp/automorphism.hpp"

#include "ringexp/errors.hpp"

#include <algorithm>
#include <numeric>

namespace ringexp {

namespace {

std::string pair_str(Elem a, Elem b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Extends a map given on `gens` by closing under + and *. Returns false on an
// inconsistency or a non-bijective result.
bool extend_map(const FiniteRing& r, std::span<const Elem> gens, std::span<const Elem> images, std::vector<Elem>& out) {
  const std::size_t n = r.order();
  constexpr Elem unset = ~Elem{0};
  out.assign(n, unset);
  std::vector<Elem> known;
  auto assign = [&](Elem x, Elem fx) {
    if (out[x] == unset) {
      out[x] = fx;
      known.push_back(x);
      return true;
    }
    return out[x] == fx;
  };
  if (!assign(r.zero(), r.zero()) || !assign(r.one(), r.one())) return false;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!assign(gens[i], images[i])) return false;
  for (std::size_t i = 0; i < known.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Elem a = known[i], b = known[j];
      if (!assign(r.add(a, b), r.add(out[a], out[b]))) return false;
      if (!assign(r.mul(a, b), r.mul(out[a], out[b]))) return false;
    }
  }
  if (known.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Elem v : out) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

RingAutomorphism RingAutomorphism::make(RingPtr host, std::vector<Elem> image) {
  const FiniteRing& r = *host;
  const std::size_t n = r.order();
  if (image.size() != n) {
    throw ValidationError("automorphism image has length " + std::to_string(image.size()) + ", ring order is " +
                          std::to_string(n));
  }
  std::vector<Elem> pre(n, ~Elem{0});
  for (Elem a = 0; a < n; ++a) {
    if (image[a] >= n) throw ValidationError("bijectivity fails: image of " + std::to_string(a) + " out of range");
    if (pre[image[a]] != ~Elem{0}) throw ValidationError("bijectivity fails at " + pair_str(pre[image[a]], a));
    pre[image[a]] = a;
  }
  if (image[r.zero()] != r.zero()) throw ValidationError("zero not preserved: image of zero is " + std::to_string(image[r.zero()]));
  if (image[r.one()] != r.one()) throw ValidationError("unit not preserved: image of one is " + std::to_string(image[r.one()]));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      if (image[r.add(a, b)] != r.add(image[a], image[b])) throw ValidationError("additivity fails at " + pair_str(a, b));
      if (image[r.mul(a, b)] != r.mul(image[a], image[b])) throw ValidationError("multiplicativity fails at " + pair_str(a, b));
    }
  }
  return RingAutomorphism(std::move(host), std::move(image));
}

RingAutomorphism RingAutomorphism::identity(RingPtr host) {
  std::vector<Elem> id(host->order());
  std::iota(id.begin(), id.end(), Elem{0});
  return RingAutomorphism(std::move(host), std::move(id));
}

RingAutomorphism RingAutomorphism::compose(const RingAutomorphism& other) const {
  if (host_ != other.host_) throw HostMismatch("compose: automorphisms live on different rings");
  std::vector<Elem> out(image_.size());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = image_[other.image_[a]];
  return RingAutomorphism(host_, std::move(out));
}

RingAutomorphism RingAutomorphism::inverse() const {
  std::vector<Elem> out(image_.size());
  for (std::size_t a = 0; a < out.size(); ++a) out[image_[a]] = static_cast<Elem>(a);
  return RingAutomorphism(host_, std::move(out));
}

RingAutomorphism RingAutomorphism::power(std::int64_t n) const {
  RingAutomorphism base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  RingAutomorphism result = identity(host_);
  while (e > 0) {
    if (e & 1) result = result.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return result;
}

std::uint64_t RingAutomorphism::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(image_.size(), false);
  std::uint64_t l = 1;
  for (std::size_t a = 0; a < image_.size(); ++a) {
    if (seen[a]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = a; !seen[x]; x = image_[x]) {
      seen[x] = true;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return l;
}

bool RingAutomorphism::is_identity() const {
  for (std::size_t a = 0; a < image_.size(); ++a)
    if (image_[a] != a) return false;
  return true;
}

ElementSet subring_closure(const FiniteRing& r, std::span<const Elem> s) {
  ElementSet in(r.order());
  std::vector<Elem> list;
  auto push = [&](Elem x) {
    if (!in.contains(x)) {
      in.insert(x);
      list.push_back(x);
    }
  };
  push(r.zero());
  push(r.one());
  for (Elem x : s) push(x);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      push(r.add(list[i], list[j]));
      push(r.mul(list[i], list[j]));
    }
  }
  return in;
}

std::vector<RingAutomorphism> enumerate_automorphisms(const RingPtr& rp, const Bounds& bounds) {
  const FiniteRing& r = *rp;
  const std::size_t n = r.order();
  if (n > bounds.max_automorphism_search) {
    throw CapacityError("automorphism search is limited to order " + std::to_string(bounds.max_automorphism_search) +
                        "; supply the automorphism explicitly");
  }
  std::vector<Elem> gens;
  ElementSet closed = subring_closure(r, gens);
  for (Elem x = 0; x < n && closed.count() < n; ++x) {
    if (!closed.contains(x)) {
      gens.push_back(x);
      closed = subring_closure(r, gens);
    }
  }

  std::vector<RingAutomorphism> out;
  out.push_back(RingAutomorphism::identity(rp));
  std::vector<Elem> images(gens.size(), 0);
  std::vector<Elem> map;
  std::vector<std::vector<Elem>> found;
  while (true) {
    if (extend_map(r, gens, images, map)) found.push_back(map);
    std::size_t i = 0;
    for (; i < images.size(); ++i) {
      if (++images[i] < n) break;
      images[i] = 0;
    }
    if (i == images.size()) break;
  }
  std::sort(found.begin(), found.end());
  for (auto& f : found) {
    auto a = RingAutomorphism::make(rp, std::move(f));
    if (!a.is_identity()) out.push_back(std::move(a));
  }
  return out;
}

RingAutomorphism frobenius(const RingPtr& r) {
  const std::uint32_t p = r->characteristic();
  if (!is_prime_number(p)) throw ValidationError("frobenius: characteristic " + std::to_string(p) + " is not prime");
  std::vector<Elem> img(r->order());
  for (Elem a = 0; a < r->order(); ++a) img[a] = r->pow(a, p);
  return RingAutomorphism::make(r, std::move(img));
}

RingAutomorphism swap_factors(const RingPtr& product, std::size_t i, std::size_t j) {
  const auto& f = product->factors();
  if (i >= f.size() || j >= f.size()) throw ValidationError("swap: factor index out of range");
  if (f[i]->order() != f[j]->order()) throw ValidationError("swap: factors have different orders");
  const std::size_t m = f[i]->order();
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) {
      if (f[i]->add(a, b) != f[j]->add(a, b) || f[i]->mul(a, b) != f[j]->mul(a, b))
        throw ValidationError("swap: factors do not share operation tables");
    }
  }
  std::vector<Elem> img(product->order());
  for (Elem a = 0; a < product->order(); ++a) {
    auto c = product->split(a);
    std::swap(c[i], c[j]);
    img[a] = product->join(c);
  }
  return RingAutomorphism::make(product, std::move(img));
}

RingAutomorphism product_automorphism(const RingPtr& product, std::span<const RingAutomorphism> parts) {
  const auto& f = product->factors();
  if (parts.size() != f.size()) throw ValidationError("product automorphism: need one automorphism per factor");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (parts[i].host() != f[i]) throw HostMismatch("product automorphism: factor " + std::to_string(i) + " mismatch");
  std::vector<Elem> img(product->order());
  for (Elem a = 0; a < product->order(); ++a) {
    auto c = product->split(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = parts[i](c[i]);
    img[a] = product->join(c);
  }
  return RingAutomorphism::make(product, std::move(img));
}

}  // namespace ringexp
