#pragma once

#include "ringexp/bounds.hpp"
#include "ringexp/verdict.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ringexp {

// Ideals of a principal ideal domain with exactly k primes p_1..p_k (the
// integers localized away from every other prime). Every nonzero ideal is
// (p_1^a_1 ... p_k^a_k), stored as its exponent vector.

struct ExponentIdeal {
  bool bottom = false;            ///< the zero ideal
  std::vector<std::uint32_t> e;   ///< exponents; all zero means R

  static ExponentIdeal zero_ideal(std::size_t k) { return {true, std::vector<std::uint32_t>(k, 0)}; }
  static ExponentIdeal whole(std::size_t k) { return {false, std::vector<std::uint32_t>(k, 0)}; }
  static ExponentIdeal of(std::vector<std::uint32_t> v) { return {false, std::move(v)}; }

  std::size_t k() const noexcept { return e.size(); }
  bool is_whole() const;
  std::uint32_t max_exponent() const;
  std::size_t zero_count() const;
  std::string str() const;

  friend bool operator==(const ExponentIdeal&, const ExponentIdeal&) = default;
  friend auto operator<=>(const ExponentIdeal&, const ExponentIdeal&) = default;
};

/// a is contained in b.
bool sym_contains(const ExponentIdeal& a, const ExponentIdeal& b);
ExponentIdeal sym_sum(const ExponentIdeal& a, const ExponentIdeal& b);
ExponentIdeal sym_product(const ExponentIdeal& a, const ExponentIdeal& b);
ExponentIdeal sym_radical(const ExponentIdeal& a);
bool sym_is_prime(const ExponentIdeal& a);
bool sym_is_maximal(const ExponentIdeal& a);

/// Prime p_i goes to p_{perm[i]}. Pullback: result[i] = a[perm[i]].
using CoordPerm = std::vector<std::size_t>;
CoordPerm identity_perm(std::size_t k);
ExponentIdeal sym_pull(const ExponentIdeal& a, const CoordPerm& perm);
ExponentIdeal sym_push(const ExponentIdeal& a, const CoordPerm& perm);
std::size_t perm_order(const CoordPerm& perm);
/// Throws ValidationError unless perm is a permutation of 0..k-1.
void check_perm(const CoordPerm& perm, std::size_t k);

/// A finite set of symbolic ideals; sorted and duplicate-free.
class SymGenerator {
 public:
  SymGenerator() = default;
  /// Throws DomainError on length mismatch; does not require generation.
  SymGenerator(std::size_t k, std::vector<ExponentIdeal> members);
  /// As above and additionally requires the family to generate.
  static SymGenerator make(std::size_t k, std::vector<ExponentIdeal> members);

  std::size_t k() const noexcept { return k_; }
  const std::vector<ExponentIdeal>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains_whole() const;
  std::string str() const;

  friend bool operator==(const SymGenerator&, const SymGenerator&) = default;
  friend auto operator<=>(const SymGenerator&, const SymGenerator&) = default;

 private:
  std::size_t k_ = 0;
  std::vector<ExponentIdeal> members_;
};

bool sym_is_generator(std::size_t k, std::span<const ExponentIdeal> members);
inline bool sym_is_generator(const SymGenerator& g) { return sym_is_generator(g.k(), g.members()); }
bool sym_refines(const SymGenerator& a, const SymGenerator& b);
SymGenerator sym_product(const SymGenerator& a, const SymGenerator& b);
SymGenerator sym_normalize(const SymGenerator& a);
SymGenerator sym_pullback(const SymGenerator& a, const CoordPerm& perm);
SymGenerator sym_pushforward(const SymGenerator& a, const CoordPerm& perm);

/// Bottom and the k maximal ideals.
std::vector<ExponentIdeal> sym_primes(std::size_t k);
/// {K_1..K_k}: K_i has exponent 1 everywhere except 0 at i. For k = 1 this is {R}.
SymGenerator sym_complementary(std::size_t k);
/// The k maximal ideals.
SymGenerator sym_maximals(std::size_t k);

using SymVerdict = Verdict<SymGenerator>;

/// For k >= 2, a generator not refined by `candidate`: with m the largest
/// exponent in the candidate, one member per coordinate j, zero at j and
/// m+1 elsewhere.
SymGenerator sym_minimal_certificate(const SymGenerator& candidate);
SymVerdict sym_minimal_generator_exists(std::size_t k);

/// Decision for the identity: k = 1, or R is not a member and every nonzero
/// member has at most one zero exponent. Throws DomainError if I does not
/// generate.
bool sym_identity_expansivity_criterion(const SymGenerator& i);

/// Up-sets of the exponent grid [0,b]^k, at most 256 points.
struct GridMask {
  std::array<std::uint64_t, 4> w{};
  bool subset_of(const GridMask& o) const {
    return !((w[0] & ~o.w[0]) | (w[1] & ~o.w[1]) | (w[2] & ~o.w[2]) | (w[3] & ~o.w[3]));
  }
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return w[i >> 6] >> (i & 63) & 1; }
  bool any() const { return (w[0] | w[1] | w[2] | w[3]) != 0; }
  GridMask& operator|=(const GridMask& o) {
    for (int i = 0; i < 4; ++i) w[i] |= o.w[i];
    return *this;
  }
  friend bool operator==(const GridMask&, const GridMask&) = default;
  friend auto operator<=>(const GridMask&, const GridMask&) = default;
};

/// Every antichain generator with exponents in [0,b]^k, with the up-set of
/// each in the grid. Built once per (k, b) and shared.
class SymAdversaryPool {
 public:
  static std::shared_ptr<const SymAdversaryPool> get(std::size_t k, std::uint32_t b, const Bounds& bounds = {});

  std::size_t k() const noexcept { return k_; }
  std::uint32_t bound() const noexcept { return b_; }
  std::size_t size() const noexcept { return up_.size(); }
  std::size_t points() const noexcept { return points_; }
  const GridMask& up(std::size_t j) const { return up_[j]; }
  SymGenerator adversary(std::size_t j) const;
  const std::vector<std::uint32_t>& point(std::size_t p) const { return coords_[p]; }
  /// Up-closure of a set of vectors after clamping entries to b.
  GridMask up_of(std::span<const ExponentIdeal> members) const;
  std::size_t index_of_point(std::span<const std::uint32_t> v) const;

  SymAdversaryPool(std::size_t k, std::uint32_t b, const Bounds& bounds);

 private:
  std::size_t k_;
  std::uint32_t b_;
  std::size_t points_;
  std::vector<std::vector<std::uint32_t>> coords_;
  std::vector<GridMask> point_up_;
  std::vector<GridMask> up_;
  std::vector<std::vector<std::uint16_t>> members_;
};

/// Result of the bounded oracle. The n_table is indexed by pool position
/// (kNever when no window up to N_max refines the adversary) and shared
/// between candidates whose clamped windows coincide.
struct SymOracleResult {
  static constexpr std::uint8_t kNever = 0xff;
  SymVerdict verdict;
  std::shared_ptr<const SymAdversaryPool> pool;
  std::shared_ptr<const std::vector<std::uint8_t>> n_table;
  std::shared_ptr<const std::vector<GridMask>> windows;  ///< U_0 .. U_{N_max}
  std::optional<std::size_t> refuter_index;
  std::vector<std::size_t> escape_zero_set;  ///< coordinates of the certificate
  std::size_t n_max = 0;
  CoordPerm perm;
};

struct SymOracleOptions {
  bool positive = true;
  std::size_t n_max = 12;
  std::uint32_t adversary_bound = 3;
};

/// Bounded brute-force oracle with memoization across calls.
class SymOracle {
 public:
  explicit SymOracle(const Bounds& bounds = {}) : bounds_(bounds) {}
  SymOracleResult run(const SymGenerator& i, const CoordPerm& perm, const SymOracleOptions& opt);
  std::size_t distinct_window_classes() const noexcept { return memo_.size(); }

 private:
  Bounds bounds_;
  std::map<std::vector<GridMask>, std::shared_ptr<const std::vector<std::uint8_t>>> memo_;
};

SymOracleResult sym_bounded_oracle(const SymGenerator& i, const CoordPerm& perm, bool positive, std::size_t n_max,
                                   std::uint32_t adversary_bound, const Bounds& bounds = {});

/// Exact clamped windows (antichains of vectors with entries <= b) computed
/// with vector arithmetic; used by certificate checks.
std::vector<SymGenerator> sym_windows(const SymGenerator& i, const CoordPerm& perm, bool positive, std::size_t n_max);

/// A zero set Z witnessing that no window ever refines j, or nullopt.
std::optional<std::vector<std::size_t>> sym_escape_certificate(const SymGenerator& i, const CoordPerm& perm,
                                                               const SymGenerator& j);

/// Expansivity of a coordinate permutation. The identity is decided exactly
/// through the criterion; other permutations are reported on the tested grid.
SymVerdict sym_expansivity(std::size_t k, const CoordPerm& perm, bool positive, const SymOracleOptions& opt = {},
                           const Bounds& bounds = {});

}  // namespace ringexp
