#include "ringexp/expansivity.hpp"

#include "ringexp/errors.hpp"

#include <algorithm>

namespace ringexp {

namespace {

struct MaskCalc {
  using Family = FamilyMask;
  const MaskAlgebra* alg;
  const std::vector<std::size_t>* pre;  // alpha^{-1} on lattice indices
  const std::vector<std::size_t>* img;  // alpha
  Family normalize(Family a) const { return alg->normalize(a); }
  Family product(Family a, Family b) const { return alg->product(a, b); }
  Family pull(Family a, int dir) const { return alg->permute(a, dir > 0 ? *pre : *img); }
};

}  // namespace

ExpansivityEngine::ExpansivityEngine(RingPtr ring, const Bounds& bounds)
    : ring_(std::move(ring)),
      bounds_(bounds),
      lattice_(std::make_unique<IdealLattice>(ring_, bounds)),
      algebra_(std::make_unique<MaskAlgebra>(*lattice_)),
      antichains_(algebra_->antichain_generators(bounds)) {}

MaskTrace ExpansivityEngine::trace(const RingAutomorphism& alpha, FamilyMask i, bool positive) const {
  const auto pre = lattice_->preimage_permutation(alpha);
  const auto img = lattice_->image_permutation(alpha);
  MaskCalc calc{algebra_.get(), &pre, &img};
  auto t = trace_windows(calc, i, positive);
  return MaskTrace{std::move(t.windows), t.cycle_start, t.cycle_length};
}

std::vector<int> ExpansivityEngine::n_table(const MaskTrace& t) const {
  std::vector<int> out(antichains_.size(), -1);
  for (std::size_t j = 0; j < antichains_.size(); ++j) {
    for (std::size_t n = 0; n < t.windows.size(); ++n) {
      if (algebra_->refines(t.windows[n], antichains_[j])) {
        out[j] = static_cast<int>(n);
        break;
      }
    }
  }
  return out;
}

FamilyMask ExpansivityEngine::power(FamilyMask a, std::uint64_t e) const {
  FamilyMask result = algebra_->whole();
  FamilyMask base = algebra_->normalize(a);
  while (e > 0) {
    if (e & 1) result = algebra_->normalize(algebra_->product(result, base));
    e >>= 1;
    if (e) base = algebra_->normalize(algebra_->product(base, base));
  }
  return result;
}

GeneratorSet ExpansivityEngine::product_sequence(const RingAutomorphism& alpha, const GeneratorSet& i, bool positive,
                                                 std::size_t n) const {
  const auto pre = lattice_->preimage_permutation(alpha);
  const auto img = lattice_->image_permutation(alpha);
  MaskCalc calc{algebra_.get(), &pre, &img};
  const FamilyMask base = algebra_->normalize(algebra_->to_mask(i));
  FamilyMask p = base, m = base, w = base;
  for (std::size_t k = 1; k <= n; ++k) {
    const FamilyMask p_next = calc.normalize(calc.product(base, calc.pull(p, +1)));
    if (positive) {
      w = p_next;
    } else {
      w = calc.normalize(calc.product(p_next, calc.pull(m, -1)));
      m = calc.normalize(calc.product(base, calc.pull(m, -1)));
    }
    p = p_next;
  }
  return algebra_->to_set(w);
}

FiniteVerdict ExpansivityEngine::to_verdict(FamilyMask i, const MaskTrace& t, bool positive) const {
  FiniteVerdict v;
  v.positive = positive;
  v.degenerate = degenerate();
  v.candidate = algebra_->to_set(i);
  v.cycle_start = t.cycle_start;
  v.cycle_length = t.cycle_length;
  for (FamilyMask w : t.windows) v.windows.push_back(algebra_->to_set(w));
  const auto table = n_table(t);
  for (std::size_t j = 0; j < antichains_.size(); ++j) {
    if (table[j] < 0) {
      v.status = Status::Refuted;
      v.refuter = algebra_->to_set(antichains_[j]);
      v.n_table.clear();
      return v;
    }
    v.n_table.emplace_back(algebra_->to_set(antichains_[j]), static_cast<std::size_t>(table[j]));
  }
  v.status = Status::Proved;
  v.witness = v.candidate;
  return v;
}

FiniteVerdict ExpansivityEngine::is_expansivity_generator(const RingAutomorphism& alpha, const GeneratorSet& i,
                                                          bool positive) const {
  if (alpha.host() != ring_ || i.host() != ring_) throw HostMismatch("expansivity: inputs live in a different ring");
  if (!is_generator(ring_, i.ideals())) throw DomainError("expansivity: candidate is not a generator");
  const FamilyMask m = algebra_->to_mask(i);
  auto v = to_verdict(m, trace(alpha, m, positive), positive);
  v.candidate = i;
  if (v.proved()) v.witness = i;
  return v;
}

FiniteVerdict ExpansivityEngine::search(const RingAutomorphism& alpha, bool positive, bool prune) const {
  if (alpha.host() != ring_) throw HostMismatch("expansivity: automorphism from a different ring");
  const bool skip_whole = prune && !lattice_->is_local() && !degenerate();
  const FamilyMask whole = algebra_->whole();
  std::vector<std::pair<GeneratorSet, GeneratorSet>> rejected;
  const auto pre = lattice_->preimage_permutation(alpha);
  const auto img = lattice_->image_permutation(alpha);
  MaskCalc calc{algebra_.get(), &pre, &img};
  std::optional<GeneratorSet> complementary;
  for (FamilyMask c : antichains_) {
    if (skip_whole && (c & whole)) {
      // every window keeps R; the complementary generator has no member above R
      if (!complementary) complementary = build_complementary_generator();
      rejected.emplace_back(algebra_->to_set(c), *complementary);
      continue;
    }
    auto wt = trace_windows(calc, c, positive);
    MaskTrace t{std::move(wt.windows), wt.cycle_start, wt.cycle_length};
    const auto table = n_table(t);
    const auto bad = std::find(table.begin(), table.end(), -1);
    if (bad == table.end()) {
      auto v = to_verdict(c, t, positive);
      v.rejected = std::move(rejected);
      return v;
    }
    rejected.emplace_back(algebra_->to_set(c), algebra_->to_set(antichains_[static_cast<std::size_t>(bad - table.begin())]));
  }
  FiniteVerdict v;
  v.status = Status::Refuted;
  v.positive = positive;
  v.degenerate = degenerate();
  v.rejected = std::move(rejected);
  if (!v.rejected.empty()) v.refuter = v.rejected.front().second;
  return v;
}

FiniteVerdict ExpansivityEngine::is_expansive(const RingAutomorphism& alpha, bool prune) const {
  return search(alpha, false, prune);
}

FiniteVerdict ExpansivityEngine::is_positively_expansive(const RingAutomorphism& alpha, bool prune) const {
  return search(alpha, true, prune);
}

FiniteVerdict ExpansivityEngine::zero_expansive() const {
  FiniteVerdict v;
  v.positive = true;
  v.degenerate = degenerate();
  for (FamilyMask c : antichains_) {
    auto it = std::find_if(antichains_.begin(), antichains_.end(), [&](FamilyMask j) { return !algebra_->refines(c, j); });
    if (it == antichains_.end()) {
      v.status = Status::Proved;
      v.candidate = v.witness = algebra_->to_set(c);
      v.windows.push_back(*v.witness);
      for (FamilyMask j : antichains_) v.n_table.emplace_back(algebra_->to_set(j), 0);
      v.rejected.clear();
      return v;
    }
    v.rejected.emplace_back(algebra_->to_set(c), algebra_->to_set(*it));
  }
  v.status = Status::Refuted;
  if (!v.rejected.empty()) v.refuter = v.rejected.front().second;
  return v;
}

bool ExpansivityEngine::is_prec_minimal_generator(const GeneratorSet& a) const {
  const FamilyMask m = algebra_->to_mask(a);
  return std::all_of(antichains_.begin(), antichains_.end(), [&](FamilyMask j) { return algebra_->refines(m, j); });
}

GeneratorSet ExpansivityEngine::build_complementary_generator() const {
  const auto& max = lattice_->maximal();
  std::vector<Ideal> ks;
  for (std::size_t i = 0; i < max.size(); ++i) {
    std::size_t k = lattice_->whole_index();
    for (std::size_t j = 0; j < max.size(); ++j)
      if (j != i) k = lattice_->product(k, max[j]);
    ks.push_back((*lattice_)[k]);
  }
  if (ks.empty()) ks.push_back(whole_ideal(ring_));
  return GeneratorSet::make(ring_, std::move(ks));
}

std::variant<LocalDecomposition, NotMinimal> ExpansivityEngine::strong_minimal_generator() const {
  LocalDecomposition d;
  d.degenerate = degenerate();
  d.maximal_count = lattice_->maximal().size();
  d.idempotents = primitive_orthogonal_idempotents(*ring_);
  if (d.idempotents.empty()) {
    d.strong_minimal_generator = GeneratorSet::make(ring_, {whole_ideal(ring_)});
    return d;
  }
  const FiniteRing& r = *ring_;
  for (Elem e : d.idempotents) {
    d.factor_ideals.push_back(principal_ideal(ring_, e));
    d.factors.push_back(make_quotient(principal_ideal(ring_, r.sub(r.one(), e))).ring);
  }
  d.strong_minimal_generator = GeneratorSet::make(ring_, d.factor_ideals);

  const auto& g = d.strong_minimal_generator;
  auto fail = [&](const GeneratorSet& failing, std::string why) -> std::variant<LocalDecomposition, NotMinimal> {
    return NotMinimal{g, failing, std::move(why)};
  };
  const FamilyMask gm = algebra_->to_mask(g);
  for (FamilyMask j : antichains_)
    if (!algebra_->refines(gm, j)) return fail(algebra_->to_set(j), "not refining every antichain generator");
  if (g.size() != d.idempotents.size()) return fail(g, "factor ideals are not distinct");
  if (d.maximal_count != g.size()) return fail(g, "factor count differs from the number of maximal ideals");
  for (std::size_t a = 0; a < g.size(); ++a) {
    const auto& i = d.factor_ideals[a];
    if (ideal_product(i, i) != i) return fail(g, "member is not idempotent");
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (!ideal_product(i, d.factor_ideals[b]).is_zero()) return fail(g, "members are not orthogonal");
    if (IdealLattice(d.factors[a], bounds_).maximal().size() != 1) return fail(g, "factor ring is not local");
  }
  return d;
}

DoublingReport ExpansivityEngine::verify_doubling_lemma(const RingAutomorphism& alpha, const GeneratorSet& i,
                                                       std::size_t depth) const {
  const auto pre = lattice_->preimage_permutation(alpha);
  const FamilyMask im = algebra_->normalize(algebra_->to_mask(i));
  const MaskTrace t = trace(alpha, im, true);
  // windows past the listed ones repeat, so the search for N stays in range
  auto window = [&](std::size_t n) {
    if (n < t.windows.size()) return t.windows[n];
    const std::size_t last = t.windows.size() - 1;
    const std::size_t start = last - t.cycle_length + 1;
    return t.windows[start + (n - start) % t.cycle_length];
  };
  DoublingReport rep;
  std::size_t n0 = 0;
  while (n0 < t.windows.size() && !algebra_->refines(algebra_->permute(t.windows[n0], pre), im)) ++n0;
  if (n0 == t.windows.size()) throw DomainError("doubling lemma: I is not a positive expansivity generator");
  rep.N = n0;
  const FamilyMask j = t.windows[n0];
  rep.J = algebra_->to_set(j);
  FamilyMask jp = j;  // J^{2^n}
  for (std::size_t n = 0; n <= depth; ++n) {
    FamilyMask lhs = jp;
    for (std::size_t s = 0; s < n; ++s) lhs = algebra_->permute(lhs, pre);
    const FamilyMask rhs = window(n0 + n);
    const bool ok = algebra_->refines(lhs, rhs);
    rep.holds.push_back(ok);
    if (!ok) {
      throw InvariantViolation("doubling lemma fails at n = " + std::to_string(n));
    }
    auto map = refinement_map(algebra_->to_set(lhs), algebra_->to_set(rhs));
    rep.maps.push_back(*map);
    jp = algebra_->normalize(algebra_->product(jp, jp));
  }
  return rep;
}

bool ExpansivityEngine::count_maximals_bound_check(const GeneratorSet& j, const GeneratorSet& k, std::size_t n) const {
  const FamilyMask jm = algebra_->to_mask(j);
  const FamilyMask km = algebra_->to_mask(k);
  if (!algebra_->is_generator(jm) || !algebra_->is_generator(km)) throw DomainError("bound check: J and K must be generators");
  if (!algebra_->refines(power(jm, n), km)) throw DomainError("bound check: J^N does not refine K");
  if (!algebra_->refines(km, algebra_->to_mask(build_complementary_generator())))
    throw DomainError("bound check: K does not refine the complementary generator");
  return lattice_->maximal().size() <= j.size();
}

}  // namespace ringexp
