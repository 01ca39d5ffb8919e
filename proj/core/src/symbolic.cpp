#include "ringexp/symbolic.hpp"

#include "ringexp/errors.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ringexp {

bool ExponentIdeal::is_whole() const {
  return !bottom && std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

std::uint32_t ExponentIdeal::max_exponent() const {
  if (bottom || e.empty()) return 0;
  return *std::max_element(e.begin(), e.end());
}

std::size_t ExponentIdeal::zero_count() const {
  if (bottom) return 0;
  return static_cast<std::size_t>(std::count(e.begin(), e.end(), 0u));
}

std::string ExponentIdeal::str() const {
  if (bottom) return "0";
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

namespace {

void same_k(const ExponentIdeal& a, const ExponentIdeal& b) {
  if (a.k() != b.k()) throw DomainError("symbolic ideals have different lengths");
}

}  // namespace

bool sym_contains(const ExponentIdeal& a, const ExponentIdeal& b) {
  same_k(a, b);
  if (a.bottom) return true;
  if (b.bottom) return false;
  for (std::size_t i = 0; i < a.k(); ++i)
    if (a.e[i] < b.e[i]) return false;
  return true;
}

ExponentIdeal sym_sum(const ExponentIdeal& a, const ExponentIdeal& b) {
  same_k(a, b);
  if (a.bottom) return b;
  if (b.bottom) return a;
  ExponentIdeal out = a;
  for (std::size_t i = 0; i < a.k(); ++i) out.e[i] = std::min(a.e[i], b.e[i]);
  return out;
}

ExponentIdeal sym_product(const ExponentIdeal& a, const ExponentIdeal& b) {
  same_k(a, b);
  if (a.bottom || b.bottom) return ExponentIdeal::zero_ideal(a.k());
  ExponentIdeal out = a;
  for (std::size_t i = 0; i < a.k(); ++i) out.e[i] += b.e[i];
  return out;
}

ExponentIdeal sym_radical(const ExponentIdeal& a) {
  if (a.bottom) return a;
  ExponentIdeal out = a;
  for (auto& x : out.e) x = std::min<std::uint32_t>(x, 1);
  return out;
}

bool sym_is_maximal(const ExponentIdeal& a) { return !a.bottom && a.max_exponent() == 1 && a.zero_count() + 1 == a.k(); }

bool sym_is_prime(const ExponentIdeal& a) { return a.bottom || sym_is_maximal(a); }

CoordPerm identity_perm(std::size_t k) {
  CoordPerm p(k);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

void check_perm(const CoordPerm& perm, std::size_t k) {
  if (perm.size() != k) throw ValidationError("permutation length differs from prime count");
  std::vector<bool> hit(k, false);
  for (auto v : perm) {
    if (v >= k || hit[v]) throw ValidationError("not a permutation of the primes");
    hit[v] = true;
  }
}

ExponentIdeal sym_pull(const ExponentIdeal& a, const CoordPerm& perm) {
  if (a.bottom) return a;
  ExponentIdeal out = a;
  for (std::size_t i = 0; i < a.k(); ++i) out.e[i] = a.e[perm[i]];
  return out;
}

ExponentIdeal sym_push(const ExponentIdeal& a, const CoordPerm& perm) {
  if (a.bottom) return a;
  ExponentIdeal out = a;
  for (std::size_t i = 0; i < a.k(); ++i) out.e[perm[i]] = a.e[i];
  return out;
}

std::size_t perm_order(const CoordPerm& perm) {
  std::size_t l = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::size_t len = 0;
    for (std::size_t x = i; !seen[x]; x = perm[x]) {
      seen[x] = true;
      ++len;
    }
    if (len) l = std::lcm(l, len);
  }
  return l;
}

SymGenerator::SymGenerator(std::size_t k, std::vector<ExponentIdeal> members) : k_(k), members_(std::move(members)) {
  for (const auto& m : members_)
    if (m.k() != k_) throw DomainError("symbolic generator: member length differs from k");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SymGenerator SymGenerator::make(std::size_t k, std::vector<ExponentIdeal> members) {
  SymGenerator g(k, std::move(members));
  if (!sym_is_generator(g)) throw DomainError("not a generator: componentwise minimum is not zero");
  return g;
}

bool SymGenerator::contains_whole() const {
  return std::any_of(members_.begin(), members_.end(), [](const auto& m) { return m.is_whole(); });
}

std::string SymGenerator::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) s += (i ? "," : "") + members_[i].str();
  return s + "}";
}

bool sym_is_generator(std::size_t k, std::span<const ExponentIdeal> members) {
  if (k == 0) throw DomainError("symbolic ring needs at least one prime");
  std::vector<bool> covered(k, false);
  for (const auto& m : members) {
    if (m.k() != k) throw DomainError("symbolic generator: member length differs from k");
    if (m.bottom) continue;
    for (std::size_t i = 0; i < k; ++i)
      if (m.e[i] == 0) covered[i] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool sym_refines(const SymGenerator& a, const SymGenerator& b) {
  for (const auto& x : a.members())
    if (std::none_of(b.members().begin(), b.members().end(), [&](const auto& y) { return sym_contains(x, y); }))
      return false;
  return true;
}

SymGenerator sym_product(const SymGenerator& a, const SymGenerator& b) {
  if (a.k() != b.k()) throw DomainError("symbolic product: different prime counts");
  std::vector<ExponentIdeal> out;
  for (const auto& x : a.members())
    for (const auto& y : b.members()) out.push_back(sym_product(x, y));
  return SymGenerator(a.k(), std::move(out));
}

SymGenerator sym_normalize(const SymGenerator& a) {
  std::vector<ExponentIdeal> keep;
  const auto& v = a.members();
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < v.size() && !dominated; ++j) dominated = i != j && sym_contains(v[i], v[j]);
    if (!dominated) keep.push_back(v[i]);
  }
  return SymGenerator(a.k(), std::move(keep));
}

SymGenerator sym_pullback(const SymGenerator& a, const CoordPerm& perm) {
  std::vector<ExponentIdeal> out;
  for (const auto& m : a.members()) out.push_back(sym_pull(m, perm));
  return SymGenerator(a.k(), std::move(out));
}

SymGenerator sym_pushforward(const SymGenerator& a, const CoordPerm& perm) {
  std::vector<ExponentIdeal> out;
  for (const auto& m : a.members()) out.push_back(sym_push(m, perm));
  return SymGenerator(a.k(), std::move(out));
}

std::vector<ExponentIdeal> sym_primes(std::size_t k) {
  if (k == 0) throw DomainError("symbolic ring needs at least one prime");
  std::vector<ExponentIdeal> out{ExponentIdeal::zero_ideal(k)};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint32_t> v(k, 0);
    v[i] = 1;
    out.push_back(ExponentIdeal::of(v));
  }
  return out;
}

SymGenerator sym_complementary(std::size_t k) {
  std::vector<ExponentIdeal> out;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint32_t> v(k, 1);
    v[i] = 0;
    out.push_back(ExponentIdeal::of(v));
  }
  return SymGenerator::make(k, std::move(out));
}

SymGenerator sym_maximals(std::size_t k) {
  auto p = sym_primes(k);
  p.erase(p.begin());
  return SymGenerator(k, std::move(p));
}

SymGenerator sym_minimal_certificate(const SymGenerator& candidate) {
  const std::size_t k = candidate.k();
  if (k < 2) throw DomainError("minimal-generator certificate needs at least two primes");
  std::uint32_t m = 0;
  for (const auto& x : candidate.members()) m = std::max(m, x.max_exponent());
  std::vector<ExponentIdeal> out;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::uint32_t> v(k, m + 1);
    v[j] = 0;
    out.push_back(ExponentIdeal::of(v));
  }
  return SymGenerator::make(k, std::move(out));
}

SymVerdict sym_minimal_generator_exists(std::size_t k) {
  if (k == 0) throw DomainError("symbolic ring needs at least one prime");
  SymVerdict v;
  v.positive = true;
  if (k == 1) {
    v.status = Status::Proved;
    v.candidate = v.witness = SymGenerator::make(1, {ExponentIdeal::whole(1)});
    v.note = "local ring: every generator contains R";
    return v;
  }
  v.status = Status::Refuted;
  v.candidate = sym_maximals(k);
  v.refuter = sym_minimal_certificate(*v.candidate);
  v.note = "for a candidate with largest exponent m, the generator with one member per prime, 0 there and m+1 "
           "elsewhere, is not refined";
  return v;
}

bool sym_identity_expansivity_criterion(const SymGenerator& i) {
  if (!sym_is_generator(i)) throw DomainError("criterion: not a generator");
  if (i.k() == 1) return true;
  if (i.contains_whole()) return false;
  return std::all_of(i.members().begin(), i.members().end(), [](const auto& m) { return m.bottom || m.zero_count() <= 1; });
}

// ---------------------------------------------------------------------------
// adversary pool

SymAdversaryPool::SymAdversaryPool(std::size_t k, std::uint32_t b, const Bounds& bounds) : k_(k), b_(b) {
  if (k == 0) throw DomainError("symbolic ring needs at least one prime");
  std::size_t pts = 1;
  for (std::size_t i = 0; i < k; ++i) {
    pts *= b + 1;
    if (pts > 256) throw CapacityError("adversary grid exceeds 256 points");
  }
  points_ = pts;
  coords_.resize(pts);
  for (std::size_t p = 0; p < pts; ++p) {
    std::vector<std::uint32_t> v(k);
    std::size_t x = p;
    for (std::size_t i = k; i-- > 0;) {
      v[i] = static_cast<std::uint32_t>(x % (b + 1));
      x /= b + 1;
    }
    coords_[p] = std::move(v);
  }
  auto leq = [&](std::size_t p, std::size_t q) {
    for (std::size_t i = 0; i < k; ++i)
      if (coords_[p][i] > coords_[q][i]) return false;
    return true;
  };
  point_up_.resize(pts);
  std::vector<GridMask> down(pts);
  std::vector<unsigned> zeros(pts, 0);
  for (std::size_t p = 0; p < pts; ++p) {
    for (std::size_t q = 0; q < pts; ++q) {
      if (leq(p, q)) point_up_[p].set(q);
      if (leq(q, p)) down[p].set(q);
    }
    for (std::size_t i = 0; i < k; ++i)
      if (coords_[p][i] == 0) zeros[p] |= 1u << i;
  }
  const unsigned all = (1u << k) - 1;
  std::vector<std::uint16_t> cur;
  GridMask chosen;
  auto dfs = [&](auto&& self, std::size_t next, unsigned cover, const GridMask& up) -> void {
    for (std::size_t p = next; p < pts; ++p) {
      if (up.test(p)) continue;  // p lies above a chosen point
      bool below = false;
      for (int w = 0; w < 4 && !below; ++w) below = (down[p].w[w] & chosen.w[w]) != 0;
      if (below) continue;
      cur.push_back(static_cast<std::uint16_t>(p));
      chosen.set(p);
      GridMask up2 = up;
      up2 |= point_up_[p];
      const unsigned c2 = cover | zeros[p];
      if (c2 == all) {
        up_.push_back(up2);
        members_.push_back(cur);
        if (up_.size() > bounds.max_adversaries) throw CapacityError("adversary pool exceeds bound");
      }
      self(self, p + 1, c2, up2);
      chosen.w[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
      cur.pop_back();
    }
  };
  dfs(dfs, 0, 0, GridMask{});
}

std::shared_ptr<const SymAdversaryPool> SymAdversaryPool::get(std::size_t k, std::uint32_t b, const Bounds& bounds) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::uint32_t>, std::shared_ptr<const SymAdversaryPool>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{k, b}];
  if (!slot) slot = std::make_shared<SymAdversaryPool>(k, b, bounds);
  return slot;
}

SymGenerator SymAdversaryPool::adversary(std::size_t j) const {
  std::vector<ExponentIdeal> out;
  for (auto p : members_[j]) out.push_back(ExponentIdeal::of(coords_[p]));
  return SymGenerator(k_, std::move(out));
}

std::size_t SymAdversaryPool::index_of_point(std::span<const std::uint32_t> v) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < k_; ++i) idx = idx * (b_ + 1) + std::min(v[i], b_);
  return idx;
}

GridMask SymAdversaryPool::up_of(std::span<const ExponentIdeal> members) const {
  GridMask out;
  for (const auto& m : members)
    if (!m.bottom) out |= point_up_[index_of_point(m.e)];
  return out;
}

// ---------------------------------------------------------------------------
// oracle

std::vector<SymGenerator> sym_windows(const SymGenerator& i, const CoordPerm& perm, bool positive, std::size_t n_max) {
  const SymGenerator base = sym_normalize(i);
  std::vector<SymGenerator> out{base};
  SymGenerator p = base, m = base;
  for (std::size_t n = 1; n <= n_max; ++n) {
    SymGenerator p_next = sym_normalize(sym_product(base, sym_pullback(p, perm)));
    if (positive) {
      out.push_back(p_next);
    } else {
      out.push_back(sym_normalize(sym_product(p_next, sym_pushforward(m, perm))));
      m = sym_normalize(sym_product(base, sym_pushforward(m, perm)));
    }
    p = std::move(p_next);
  }
  return out;
}

std::optional<std::vector<std::size_t>> sym_escape_certificate(const SymGenerator& i, const CoordPerm& perm,
                                                               const SymGenerator& j) {
  const std::size_t k = i.k();
  const std::size_t period = perm_order(perm);
  // members of I pulled back r times, r = 0..period-1
  std::vector<std::vector<ExponentIdeal>> pulled(period);
  for (const auto& a : i.members()) {
    if (a.bottom) continue;
    ExponentIdeal x = a;
    for (std::size_t r = 0; r < period; ++r) {
      pulled[r].push_back(x);
      x = sym_pull(x, perm);
    }
  }
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<bool> pick(k, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
    do {
      std::vector<std::size_t> z;
      for (std::size_t c = 0; c < k; ++c)
        if (pick[c]) z.push_back(c);
      auto zero_on = [&](const ExponentIdeal& x) {
        return std::all_of(z.begin(), z.end(), [&](std::size_t c) { return x.e[c] == 0; });
      };
      bool escapes = std::all_of(pulled.begin(), pulled.end(),
                                 [&](const auto& row) { return std::any_of(row.begin(), row.end(), zero_on); });
      bool blocks = std::all_of(j.members().begin(), j.members().end(), [&](const ExponentIdeal& y) {
        return y.bottom || std::any_of(z.begin(), z.end(), [&](std::size_t c) { return y.e[c] > 0; });
      });
      if (escapes && blocks) return z;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

namespace {

// Clamped window up-sets U_0..U_{n_max} computed on grid points.
std::vector<GridMask> grid_windows(const SymAdversaryPool& pool, const SymGenerator& i, const CoordPerm& perm,
                                   bool positive, std::size_t n_max) {
  const std::size_t k = pool.k();
  const std::uint32_t b = pool.bound();
  std::vector<std::vector<std::uint32_t>> base;
  for (const auto& a : i.members()) {
    if (a.bottom) continue;
    std::vector<std::uint32_t> v(k);
    for (std::size_t c = 0; c < k; ++c) v[c] = std::min(a.e[c], b);
    base.push_back(std::move(v));
  }
  auto points_of = [&](const GridMask& g) {
    std::vector<std::size_t> pts;
    for (std::size_t p = 0; p < pool.points(); ++p)
      if (g.test(p)) pts.push_back(p);
    return pts;
  };
  // I * pull^dir(S)
  auto step = [&](const GridMask& s, bool pull) {
    GridMask out;
    std::vector<std::uint32_t> moved(k), sum(k);
    for (std::size_t p : points_of(s)) {
      const auto& w = pool.point(p);
      for (std::size_t c = 0; c < k; ++c) {
        if (pull)
          moved[c] = w[perm[c]];
        else
          moved[perm[c]] = w[c];
      }
      for (const auto& a : base) {
        for (std::size_t c = 0; c < k; ++c) sum[c] = std::min(a[c] + moved[c], b);
        std::vector<ExponentIdeal> one{ExponentIdeal::of(sum)};
        out |= pool.up_of(one);
      }
    }
    return out;
  };
  auto times = [&](const GridMask& s, const GridMask& t) {
    GridMask out;
    std::vector<std::uint32_t> sum(k);
    const auto ps = points_of(s);
    for (std::size_t q : points_of(t)) {
      for (std::size_t p : ps) {
        for (std::size_t c = 0; c < k; ++c) sum[c] = std::min(pool.point(p)[c] + pool.point(q)[c], b);
        out.set(pool.index_of_point(sum));
      }
    }
    std::vector<ExponentIdeal> pts;
    for (std::size_t x : points_of(out)) pts.push_back(ExponentIdeal::of(pool.point(x)));
    return pool.up_of(pts);
  };
  auto push_all = [&](const GridMask& s) {
    GridMask out;
    std::vector<std::uint32_t> moved(k);
    for (std::size_t p : points_of(s)) {
      for (std::size_t c = 0; c < k; ++c) moved[perm[c]] = pool.point(p)[c];
      out.set(pool.index_of_point(moved));
    }
    return out;
  };

  const GridMask u0 = pool.up_of(i.members());
  std::vector<GridMask> out{u0};
  GridMask p = u0, m = u0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    GridMask p_next = step(p, true);
    if (positive) {
      out.push_back(p_next);
    } else {
      out.push_back(times(p_next, push_all(m)));
      m = step(m, false);
    }
    p = p_next;
  }
  return out;
}

SymGenerator minimal_points(const SymAdversaryPool& pool, const GridMask& u) {
  std::vector<ExponentIdeal> pts;
  for (std::size_t p = 0; p < pool.points(); ++p)
    if (u.test(p)) pts.push_back(ExponentIdeal::of(pool.point(p)));
  return sym_normalize(SymGenerator(pool.k(), std::move(pts)));
}

}  // namespace

SymOracleResult SymOracle::run(const SymGenerator& i, const CoordPerm& perm, const SymOracleOptions& opt) {
  const std::size_t k = i.k();
  check_perm(perm, k);
  if (!sym_is_generator(i)) throw DomainError("oracle: candidate is not a generator");
  if (opt.n_max == 0 || opt.n_max >= SymOracleResult::kNever || opt.adversary_bound == 0)
    throw DomainError("oracle: bounds must be positive and N_max below 255");

  SymOracleResult res;
  res.pool = SymAdversaryPool::get(k, opt.adversary_bound, bounds_);
  res.n_max = opt.n_max;
  res.perm = perm;
  const auto& pool = *res.pool;
  auto wins = std::make_shared<std::vector<GridMask>>(grid_windows(pool, i, perm, opt.positive, opt.n_max));
  for (std::size_t n = 1; n < wins->size(); ++n)
    if (!(*wins)[n].subset_of((*wins)[n - 1])) throw InvariantViolation("oracle: windows are not monotone");
  res.windows = wins;

  auto& slot = memo_[*wins];
  if (!slot) {
    auto table = std::make_shared<std::vector<std::uint8_t>>(pool.size(), SymOracleResult::kNever);
    const auto& w = *wins;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const GridMask& up = pool.up(j);
      if (!w.back().subset_of(up)) continue;
      std::size_t lo = 0, hi = w.size() - 1;  // least n with w[n] inside up
      while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (w[mid].subset_of(up))
          hi = mid;
        else
          lo = mid + 1;
      }
      (*table)[j] = static_cast<std::uint8_t>(lo);
    }
    slot = std::move(table);
  }
  res.n_table = slot;

  SymVerdict& v = res.verdict;
  v.positive = opt.positive;
  v.candidate = i;
  v.exact = false;
  for (const auto& u : *wins) v.windows.push_back(minimal_points(pool, u));

  const auto& table = *res.n_table;
  bool unrefined = false, at_bound = false;
  for (std::size_t j = 0; j < table.size(); ++j) {
    if (table[j] == SymOracleResult::kNever) {
      unrefined = true;
      if (!res.refuter_index) {
        const SymGenerator adv = pool.adversary(j);
        if (auto z = sym_escape_certificate(i, perm, adv)) {
          res.refuter_index = j;
          res.escape_zero_set = *z;
          v.refuter = adv;
        }
      }
    } else if (table[j] == opt.n_max) {
      at_bound = true;
    }
  }
  if (res.refuter_index) {
    v.status = Status::Refuted;
    v.exact = true;
    v.note = "escape certificate: some window member is zero on the listed primes for every n";
  } else if (unrefined || at_bound) {
    v.status = Status::UnknownAtBound;
    v.note = unrefined ? "an adversary is never refined up to N_max and no escape certificate exists"
                       : "an adversary needs exactly N_max";
  } else {
    v.status = Status::Proved;
    v.witness = i;
    v.note = "proved on the tested grid";
  }
  return res;
}

SymOracleResult sym_bounded_oracle(const SymGenerator& i, const CoordPerm& perm, bool positive, std::size_t n_max,
                                   std::uint32_t adversary_bound, const Bounds& bounds) {
  SymOracle o(bounds);
  return o.run(i, perm, SymOracleOptions{positive, n_max, adversary_bound});
}

SymVerdict sym_expansivity(std::size_t k, const CoordPerm& perm, bool positive, const SymOracleOptions& opt,
                           const Bounds& bounds) {
  check_perm(perm, k);
  const SymGenerator cand = sym_complementary(k);
  if (perm == identity_perm(k)) {
    SymVerdict v;
    v.positive = positive;
    v.candidate = cand;
    if (sym_identity_expansivity_criterion(cand)) {
      v.status = Status::Proved;
      v.witness = cand;
      v.note = "identity criterion: every member has at most one zero exponent";
    } else {
      v.status = Status::Refuted;
    }
    return v;
  }
  SymOracleOptions o = opt;
  o.positive = positive;
  return SymOracle(bounds).run(cand, perm, o).verdict;
}

}  // namespace ringexp
