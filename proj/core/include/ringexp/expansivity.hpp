#pragma once

#include "ringexp/automorphism.hpp"
#include "ringexp/bounds.hpp"
#include "ringexp/generators.hpp"
#include "ringexp/lattice.hpp"
#include "ringexp/verdict.hpp"
#include "ringexp/window.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace ringexp {

using FiniteVerdict = Verdict<GeneratorSet>;

/// R as a product of local rings R e_1 x ... x R e_k.
struct LocalDecomposition {
  std::vector<Elem> idempotents;
  std::vector<Ideal> factor_ideals;  ///< R e_i
  GeneratorSet strong_minimal_generator;
  std::vector<RingPtr> factors;      ///< R/(1 - e_i), isomorphic to R e_i
  std::size_t maximal_count = 0;
  bool degenerate = false;
};

/// Evidence that a candidate is not a minimal generator.
struct NotMinimal {
  GeneratorSet candidate;
  GeneratorSet failing;
  std::string reason;
};

struct DoublingReport {
  std::size_t N = 0;          ///< least N with alpha^{-1}(I_N) refining I
  GeneratorSet J;             ///< I_N
  std::vector<bool> holds;    ///< alpha^{-n}(J^{2^n}) refines I_{N+n}, n = 0..depth
  std::vector<std::vector<std::size_t>> maps;
};

/// Mask-level counterpart of a window trace.
struct MaskTrace {
  std::vector<FamilyMask> windows;
  std::size_t cycle_start = 0;
  std::size_t cycle_length = 0;
};

/// Expansivity decisions for automorphisms of one finite ring.
///
/// Holds the ideal lattice, its mask algebra and the list of antichain
/// generators, all of which every query quantifies over.
class ExpansivityEngine {
 public:
  explicit ExpansivityEngine(RingPtr ring, const Bounds& bounds = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const IdealLattice& lattice() const noexcept { return *lattice_; }
  const MaskAlgebra& algebra() const noexcept { return *algebra_; }
  const std::vector<FamilyMask>& antichains() const noexcept { return antichains_; }
  bool degenerate() const noexcept { return ring_->is_trivial(); }

  GeneratorSet product_sequence(const RingAutomorphism& alpha, const GeneratorSet& i, bool positive, std::size_t n) const;

  FiniteVerdict is_expansivity_generator(const RingAutomorphism& alpha, const GeneratorSet& i, bool positive) const;
  FiniteVerdict is_expansive(const RingAutomorphism& alpha, bool prune = true) const;
  FiniteVerdict is_positively_expansive(const RingAutomorphism& alpha, bool prune = true) const;
  /// 0-expansivity: existence of a generator refining every generator.
  FiniteVerdict zero_expansive() const;

  std::variant<LocalDecomposition, NotMinimal> strong_minimal_generator() const;
  bool is_prec_minimal_generator(const GeneratorSet& a) const;
  /// {K_1..K_r}, K_i the product of all maximal ideals except the i-th.
  GeneratorSet build_complementary_generator() const;

  DoublingReport verify_doubling_lemma(const RingAutomorphism& alpha, const GeneratorSet& i, std::size_t depth) const;
  /// Requires J^N refining K and K refining the complementary generator;
  /// returns #maximal ideals <= |J|.
  bool count_maximals_bound_check(const GeneratorSet& j, const GeneratorSet& k, std::size_t n) const;

  // Mask-level access, used by the suites and benchmarks.
  MaskTrace trace(const RingAutomorphism& alpha, FamilyMask i, bool positive) const;
  /// Least window index refining each antichain generator, -1 if none.
  std::vector<int> n_table(const MaskTrace& t) const;
  FamilyMask power(FamilyMask a, std::uint64_t e) const;

 private:
  FiniteVerdict search(const RingAutomorphism& alpha, bool positive, bool prune) const;
  FiniteVerdict to_verdict(FamilyMask i, const MaskTrace& t, bool positive) const;

  RingPtr ring_;
  Bounds bounds_;
  std::unique_ptr<IdealLattice> lattice_;
  std::unique_ptr<MaskAlgebra> algebra_;
  std::vector<FamilyMask> antichains_;
};

}  // namespace ringexp
