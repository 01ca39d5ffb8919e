#include "ringexp/generators.hpp"

#include "ringexp/errors.hpp"

#include <algorithm>

namespace ringexp {

namespace {

void check_host(const GeneratorSet& a, const GeneratorSet& b, const char* op) {
  if (a.host() != b.host()) throw HostMismatch(std::string(op) + ": generators live in different rings");
}

}  // namespace

GeneratorSet::GeneratorSet(RingPtr host, std::vector<Ideal> ideals) : host_(std::move(host)), ideals_(std::move(ideals)) {
  for (const auto& i : ideals_)
    if (i.host() != host_) throw HostMismatch("generator: member from a different ring");
  std::sort(ideals_.begin(), ideals_.end());
  ideals_.erase(std::unique(ideals_.begin(), ideals_.end()), ideals_.end());
}

GeneratorSet GeneratorSet::make(RingPtr host, std::vector<Ideal> ideals) {
  if (ideals.empty()) throw ValidationError("generator: empty family");
  GeneratorSet g(std::move(host), std::move(ideals));
  if (!is_generator(g.host_, g.ideals_)) throw ValidationError("generator: members do not sum to R");
  return g;
}

GeneratorSet GeneratorSet::unchecked(RingPtr host, std::vector<Ideal> ideals) {
  return GeneratorSet(std::move(host), std::move(ideals));
}

bool GeneratorSet::contains(const Ideal& i) const { return std::binary_search(ideals_.begin(), ideals_.end(), i); }

bool GeneratorSet::contains_whole() const { return !ideals_.empty() && ideals_.back().is_whole(); }

bool is_generator(const RingPtr& r, std::span<const Ideal> ideals) {
  if (ideals.empty()) return false;
  Ideal acc = zero_ideal(r);
  for (const auto& i : ideals) {
    if (i.host() != r) throw HostMismatch("is_generator: member from a different ring");
    acc = ideal_sum(acc, i);
  }
  return acc.is_whole();
}

std::optional<std::vector<std::size_t>> refinement_map(const GeneratorSet& a, const GeneratorSet& b) {
  check_host(a, b, "refines");
  std::vector<std::size_t> map;
  for (const auto& i : a.ideals()) {
    std::size_t k = 0;
    while (k < b.size() && !i.subset_of(b.ideals()[k])) ++k;
    if (k == b.size()) return std::nullopt;
    map.push_back(k);
  }
  return map;
}

bool refines(const GeneratorSet& a, const GeneratorSet& b) { return refinement_map(a, b).has_value(); }

GeneratorSet gen_product(const GeneratorSet& a, const GeneratorSet& b) {
  check_host(a, b, "gen_product");
  std::vector<Ideal> out;
  for (const auto& x : a.ideals())
    for (const auto& y : b.ideals()) out.push_back(ideal_product(x, y));
  return GeneratorSet::unchecked(a.host(), std::move(out));
}

GeneratorSet gen_power(const GeneratorSet& a, std::uint64_t e) {
  GeneratorSet result = GeneratorSet::unchecked(a.host(), {whole_ideal(a.host())});
  GeneratorSet base = a;
  while (e > 0) {
    if (e & 1) result = gen_product(result, base);
    e >>= 1;
    if (e) base = gen_product(base, base);
  }
  return result;
}

GeneratorSet pullback(const RingAutomorphism& alpha, const GeneratorSet& a) {
  if (alpha.host() != a.host()) throw HostMismatch("pullback: automorphism and generator live in different rings");
  std::vector<Ideal> out;
  for (const auto& i : a.ideals()) out.push_back(preimage(alpha, i));
  return GeneratorSet::unchecked(a.host(), std::move(out));
}

GeneratorSet normalize_antichain(const GeneratorSet& a) {
  std::vector<Ideal> keep;
  const auto& v = a.ideals();
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < v.size() && !dominated; ++j)
      dominated = j != i && v[i].subset_of(v[j]) && v[i] != v[j];
    if (!dominated) keep.push_back(v[i]);
  }
  return GeneratorSet::unchecked(a.host(), std::move(keep));
}

bool is_antichain(const GeneratorSet& a) { return normalize_antichain(a).size() == a.size(); }

std::vector<GeneratorSet> enumerate_generators(const IdealLattice& lat, bool antichains_only, const Bounds& bounds) {
  MaskAlgebra alg(lat);
  std::vector<GeneratorSet> out;
  if (antichains_only) {
    for (FamilyMask m : alg.antichain_generators(bounds)) out.push_back(alg.to_set(m));
    return out;
  }
  const std::size_t m = lat.size();
  if (m > bounds.max_generator_ideals || m >= 40) {
    throw CapacityError("generator enumeration is limited to lattices of " + std::to_string(bounds.max_generator_ideals) +
                        " ideals");
  }
  std::vector<FamilyMask> masks;
  for (FamilyMask s = 1; s < (FamilyMask{1} << m); ++s) {
    if (alg.is_generator(s)) {
      masks.push_back(s);
      if (masks.size() > bounds.max_generators) throw CapacityError("generator count exceeds bound");
    }
  }
  std::sort(masks.begin(), masks.end(), MaskAlgebra::lex_less);
  for (FamilyMask s : masks) out.push_back(alg.to_set(s));
  return out;
}

MaskAlgebra::MaskAlgebra(const IdealLattice& lat) : lat_(&lat), m_(lat.size()) {
  if (m_ > 64) throw CapacityError("mask algebra supports at most 64 ideals, lattice has " + std::to_string(m_));
  above_.assign(m_, 0);
  strictly_above_.assign(m_, 0);
  below_.assign(m_, 0);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j)
      if (lat.leq(i, j)) {
        above_[i] |= FamilyMask{1} << j;
        below_[j] |= FamilyMask{1} << i;
        if (i != j) strictly_above_[i] |= FamilyMask{1} << j;
      }
  prod_.resize(m_ * m_);
  sum_.resize(m_ * m_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      prod_[i * m_ + j] = prod_[j * m_ + i] = static_cast<std::uint8_t>(lat.product(i, j));
      sum_[i * m_ + j] = sum_[j * m_ + i] = static_cast<std::uint8_t>(lat.sum(i, j));
    }
}

FamilyMask MaskAlgebra::product(FamilyMask a, FamilyMask b) const {
  FamilyMask out = 0;
  for (FamilyMask x = a; x; x &= x - 1) {
    const auto i = static_cast<std::size_t>(__builtin_ctzll(x));
    for (FamilyMask y = b; y; y &= y - 1) out |= FamilyMask{1} << prod_[i * m_ + static_cast<std::size_t>(__builtin_ctzll(y))];
  }
  return out;
}

FamilyMask MaskAlgebra::permute(FamilyMask a, const std::vector<std::size_t>& perm) const {
  FamilyMask out = 0;
  for (; a; a &= a - 1) out |= FamilyMask{1} << perm[static_cast<std::size_t>(__builtin_ctzll(a))];
  return out;
}

bool MaskAlgebra::is_generator(FamilyMask a) const {
  if (!a) return false;
  std::size_t acc = 0;
  for (; a; a &= a - 1) acc = sum_[acc * m_ + static_cast<std::size_t>(__builtin_ctzll(a))];
  return acc == m_ - 1;
}

GeneratorSet MaskAlgebra::to_set(FamilyMask a) const {
  std::vector<Ideal> v;
  for (; a; a &= a - 1) v.push_back((*lat_)[static_cast<std::size_t>(__builtin_ctzll(a))]);
  return GeneratorSet::unchecked(lat_->ring(), std::move(v));
}

FamilyMask MaskAlgebra::to_mask(const GeneratorSet& g) const {
  FamilyMask out = 0;
  for (const auto& i : g.ideals()) out |= FamilyMask{1} << lat_->index_of(i);
  return out;
}

bool MaskAlgebra::lex_less(FamilyMask a, FamilyMask b) {
  while (a && b) {
    const int la = __builtin_ctzll(a), lb = __builtin_ctzll(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

std::vector<FamilyMask> MaskAlgebra::antichain_generators(const Bounds& bounds) const {
  if (m_ > bounds.max_generator_ideals) {
    throw CapacityError("antichain enumeration is limited to lattices of " + std::to_string(bounds.max_generator_ideals) +
                        " ideals, lattice has " + std::to_string(m_));
  }
  std::vector<FamilyMask> out;
  // preorder DFS over ascending indices emits sets in lexicographic order
  auto dfs = [&](auto&& self, FamilyMask cur, std::size_t next, std::size_t acc) -> void {
    for (std::size_t i = next; i < m_; ++i) {
      if (below_[i] & cur) continue;  // some member lies below i
      const FamilyMask s = cur | (FamilyMask{1} << i);
      const std::size_t a = sum_[acc * m_ + i];
      if (a == m_ - 1) {
        out.push_back(s);
        if (out.size() > bounds.max_generators) throw CapacityError("antichain generator count exceeds bound");
      }
      self(self, s, i + 1, a);
    }
  };
  dfs(dfs, 0, 0, 0);
  return out;
}

}  // namespace ringexp
