#include "ringexp/zariski.hpp"

#include "ringexp/errors.hpp"

namespace ringexp {

PointMask Spectrum::maximal_points() const {
  PointMask out = 0;
  for (auto p : space.maximal_points()) out |= PointMask{1} << p;
  return out;
}

Spectrum spectrum(const IdealLattice& lat) {
  const auto& primes = lat.primes();
  if (primes.size() > 64) throw CapacityError("spectrum: more than 64 primes");
  std::vector<std::string> labels;
  for (auto i : primes) labels.push_back("P" + std::to_string(i));
  Spectrum s;
  s.prime_index = primes;
  s.space = FiniteSpace::from_order(
      primes.size(), [&](std::size_t p, std::size_t q) { return lat.leq(primes[p], primes[q]); }, std::move(labels));
  return s;
}

PointMask zariski_open(const IdealLattice& lat, const Spectrum& s, std::size_t ideal_index) {
  PointMask out = 0;
  for (std::size_t p = 0; p < s.prime_index.size(); ++p)
    if (!lat.leq(ideal_index, s.prime_index[p])) out |= PointMask{1} << p;
  return out;
}

SpaceMap spec_map(const IdealLattice& lat, const Spectrum& s, const RingAutomorphism& alpha) {
  if (alpha.host() != lat.ring()) throw HostMismatch("spec map: automorphism from a different ring");
  const auto pre = lat.preimage_permutation(alpha);
  std::vector<std::size_t> point_of(lat.size(), s.prime_index.size());
  for (std::size_t p = 0; p < s.prime_index.size(); ++p) point_of[s.prime_index[p]] = p;
  SpaceMap h;
  for (auto i : s.prime_index) {
    const auto q = point_of[pre[i]];
    if (q == s.prime_index.size()) throw InvariantViolation("spec map: preimage of a prime is not prime");
    h.f.push_back(q);
  }
  return h;
}

OpenCover zariski_cover(const IdealLattice& lat, const Spectrum& s, const GeneratorSet& g) {
  std::vector<PointMask> out;
  for (const auto& i : g.ideals()) out.push_back(zariski_open(lat, s, lat.index_of(i)));
  return make_cover(std::move(out));
}

Spectrum sym_spectrum(std::size_t k) {
  if (k + 1 > 64) throw CapacityError("symbolic spectrum: too many primes");
  std::vector<std::string> labels{"(0)"};
  for (std::size_t i = 1; i <= k; ++i) labels.push_back("(p" + std::to_string(i) + ")");
  Spectrum s;
  s.space = FiniteSpace::from_order(
      k + 1, [](std::size_t p, std::size_t q) { return p == q || p == 0; }, std::move(labels));
  return s;
}

SpaceMap sym_spec_map(const CoordPerm& perm) {
  check_perm(perm, perm.size());
  const std::size_t k = perm.size();
  SpaceMap h;
  h.f.push_back(0);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::uint32_t> e(k, 0);
    e[j] = 1;
    const auto pulled = sym_pull(ExponentIdeal::of(e), perm);
    std::size_t i = 0;
    while (pulled.e[i] == 0) ++i;
    h.f.push_back(i + 1);
  }
  return h;
}

PointMask sym_zariski_open(std::size_t k, const ExponentIdeal& i) {
  if (i.k() != k) throw DomainError("symbolic open: length mismatch");
  if (i.bottom) return 0;
  PointMask out = 1;  // the zero ideal never contains a nonzero ideal
  for (std::size_t j = 0; j < k; ++j)
    if (i.e[j] == 0) out |= PointMask{1} << (j + 1);
  return out;
}

}  // namespace ringexp
