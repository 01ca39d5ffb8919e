#include "ringexp/topology.hpp"

#include "ringexp/errors.hpp"
#include "ringexp/window.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <map>
#include <set>

namespace ringexp {

namespace {

constexpr PointMask bit(std::size_t i) { return PointMask{1} << i; }

struct CoverCalc {
  using Family = OpenCover;
  const SpaceMap* h;
  const SpaceMap* h_inv;
  Family normalize(const Family& a) const { return normalize_cover(a); }
  Family product(const Family& a, const Family& b) const { return cover_wedge(a, b); }
  Family pull(const Family& a, int dir) const { return preimage_cover(dir > 0 ? *h : *h_inv, a); }
};

std::size_t total_size(const OpenCover& u) {
  std::size_t s = 0;
  for (PointMask m : u) s += static_cast<std::size_t>(std::popcount(m));
  return s;
}

void sort_finest_first(std::vector<OpenCover>& covers) {
  std::sort(covers.begin(), covers.end(), [](const OpenCover& a, const OpenCover& b) {
    const auto sa = total_size(a), sb = total_size(b);
    if (sa != sb) return sa < sb;
    return a < b;
  });
}

void check_space_map(const FiniteSpace& x, const SpaceMap& h) {
  if (h.f.size() != x.size()) throw HostMismatch("map and space differ in size");
}

// least n with windows[n] refining v, or -1
long first_refining(const std::vector<OpenCover>& windows, const OpenCover& v) {
  for (std::size_t n = 0; n < windows.size(); ++n)
    if (cover_refines(windows[n], v)) return static_cast<long>(n);
  return -1;
}

}  // namespace

FiniteSpace FiniteSpace::from_order(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq,
                                    std::vector<std::string> labels) {
  if (n > 64) throw CapacityError("finite space: more than 64 points");
  if (!labels.empty() && labels.size() != n) throw ValidationError("finite space: label count mismatch");
  FiniteSpace s;
  s.down_.assign(n, 0);
  s.up_.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (leq(p, q)) {
        s.down_[q] |= bit(p);
        s.up_[p] |= bit(q);
      }
  for (std::size_t p = 0; p < n; ++p) {
    if (!(s.down_[p] & bit(p))) throw ValidationError("finite space: order is not reflexive");
    for (std::size_t q = 0; q < n; ++q) {
      if (q != p && (s.down_[p] & bit(q)) && (s.down_[q] & bit(p)))
        throw ValidationError("finite space: order is not antisymmetric (space is not T0)");
      if ((s.down_[p] & bit(q)) && (s.down_[q] & ~s.down_[p]))
        throw ValidationError("finite space: order is not transitive");
    }
  }
  if (labels.empty())
    for (std::size_t p = 0; p < n; ++p) labels.push_back(std::to_string(p));
  s.labels_ = std::move(labels);
  return s;
}

FiniteSpace FiniteSpace::discrete(std::size_t n) {
  return from_order(n, [](std::size_t p, std::size_t q) { return p == q; });
}

bool FiniteSpace::is_open(PointMask s) const {
  if (s & ~all()) return false;
  for (PointMask t = s; t; t &= t - 1)
    if (down_[static_cast<std::size_t>(std::countr_zero(t))] & ~s) return false;
  return true;
}

PointMask FiniteSpace::down_closure(PointMask s) const {
  PointMask out = 0;
  for (PointMask t = s & all(); t; t &= t - 1) out |= down_[static_cast<std::size_t>(std::countr_zero(t))];
  return out;
}

std::vector<PointMask> FiniteSpace::opens(const Bounds& bounds) const {
  if (size() > bounds.max_space_points) throw CapacityError("finite space: too many points to enumerate opens");
  std::vector<PointMask> out;
  for (PointMask s = 0; s <= all(); ++s)
    if (is_open(s)) out.push_back(s);
  return out;
}

std::vector<std::size_t> FiniteSpace::maximal_points() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < size(); ++p)
    if (up_[p] == bit(p)) out.push_back(p);
  return out;
}

bool FiniteSpace::is_discrete() const {
  for (std::size_t p = 0; p < size(); ++p)
    if (down_[p] != bit(p)) return false;
  return true;
}

FiniteSpace FiniteSpace::subspace(PointMask y) const {
  std::vector<std::size_t> pts;
  for (PointMask t = y & all(); t; t &= t - 1) pts.push_back(static_cast<std::size_t>(std::countr_zero(t)));
  std::vector<std::string> labels;
  for (auto p : pts) labels.push_back(labels_[p]);
  return from_order(
      pts.size(), [&](std::size_t a, std::size_t b) { return leq(pts[a], pts[b]); }, std::move(labels));
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteSpace::order_pairs(bool hasse) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t q = 0; q < size(); ++q)
    for (std::size_t p = 0; p < size(); ++p) {
      if (p == q || !leq(p, q)) continue;
      if (hasse) {
        // p < r < q for some r
        const PointMask between = up_[p] & down_[q] & ~bit(p) & ~bit(q);
        if (between) continue;
      }
      out.emplace_back(p, q);
    }
  return out;
}

SpaceMap identity_map(std::size_t n) {
  SpaceMap h;
  h.f.resize(n);
  std::iota(h.f.begin(), h.f.end(), std::size_t{0});
  return h;
}

SpaceMap compose(const SpaceMap& outer, const SpaceMap& inner) {
  SpaceMap h;
  for (auto p : inner.f) h.f.push_back(outer.f.at(p));
  return h;
}

SpaceMap inverse(const SpaceMap& h) {
  SpaceMap out;
  out.f.assign(h.f.size(), h.f.size());
  for (std::size_t p = 0; p < h.f.size(); ++p) {
    if (h.f[p] >= h.f.size() || out.f[h.f[p]] != h.f.size()) throw ValidationError("map is not a bijection");
    out.f[h.f[p]] = p;
  }
  return out;
}

bool is_continuous(const FiniteSpace& x, const FiniteSpace& y, const SpaceMap& h) {
  if (h.f.size() != x.size()) return false;
  for (auto q : h.f)
    if (q >= y.size()) return false;
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = 0; q < x.size(); ++q)
      if (x.leq(p, q) && !y.leq(h(p), h(q))) return false;
  return true;
}

bool is_homeomorphism(const FiniteSpace& x, const SpaceMap& h) {
  if (h.f.size() != x.size()) return false;
  std::vector<bool> hit(x.size(), false);
  for (auto q : h.f) {
    if (q >= x.size() || hit[q]) return false;
    hit[q] = true;
  }
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = 0; q < x.size(); ++q)
      if (x.leq(p, q) != x.leq(h(p), h(q))) return false;
  return true;
}

void check_homeomorphism(const FiniteSpace& x, const SpaceMap& h) {
  if (!is_homeomorphism(x, h)) throw ValidationError("map is not a homeomorphism of the space");
}

std::vector<SpaceMap> homeomorphisms(const FiniteSpace& x) {
  if (x.size() > 10) throw CapacityError("homeomorphism enumeration limited to 10 points");
  std::vector<SpaceMap> out;
  SpaceMap h = identity_map(x.size());
  do {
    if (is_homeomorphism(x, h)) out.push_back(h);
  } while (std::next_permutation(h.f.begin(), h.f.end()));
  return out;
}

PointMask preimage_set(const SpaceMap& h, PointMask s) {
  PointMask out = 0;
  for (std::size_t p = 0; p < h.f.size(); ++p)
    if (s >> h.f[p] & 1) out |= bit(p);
  return out;
}

OpenCover make_cover(std::vector<PointMask> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

bool is_cover(const FiniteSpace& x, const OpenCover& u) {
  PointMask un = 0;
  for (PointMask m : u) {
    if (!x.is_open(m)) return false;
    un |= m;
  }
  return un == x.all();
}

OpenCover normalize_cover(const OpenCover& u) {
  OpenCover out;
  for (PointMask a : u) {
    if (!a) continue;
    const bool dominated = std::any_of(u.begin(), u.end(), [&](PointMask b) { return b != a && (a & ~b) == 0; });
    if (!dominated) out.push_back(a);
  }
  return make_cover(std::move(out));
}

OpenCover cover_wedge(const OpenCover& a, const OpenCover& b) {
  std::vector<PointMask> out;
  out.reserve(a.size() * b.size());
  for (PointMask x : a)
    for (PointMask y : b)
      if (x & y) out.push_back(x & y);
  return make_cover(std::move(out));
}

OpenCover cover_wedge(std::span<const OpenCover> covers) {
  if (covers.empty()) throw DomainError("wedge of an empty list of covers");
  OpenCover acc = covers.front();
  for (std::size_t i = 1; i < covers.size(); ++i) acc = cover_wedge(acc, covers[i]);
  return acc;
}

bool cover_refines(const OpenCover& a, const OpenCover& b) {
  return std::all_of(a.begin(), a.end(), [&](PointMask x) {
    return std::any_of(b.begin(), b.end(), [&](PointMask y) { return (x & ~y) == 0; });
  });
}

OpenCover preimage_cover(const SpaceMap& h, const OpenCover& u) {
  std::vector<PointMask> out;
  for (PointMask m : u) out.push_back(preimage_set(h, m));
  return make_cover(std::move(out));
}

std::vector<OpenCover> irredundant_covers(const FiniteSpace& x, const Bounds& bounds) {
  std::vector<PointMask> opens = x.opens(bounds);
  opens.erase(std::remove(opens.begin(), opens.end(), PointMask{0}), opens.end());
  std::vector<OpenCover> out;
  if (x.size() == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<PointMask> chosen;
  // chosen members keep a private point; covered counts the union
  auto dfs = [&](auto&& self, std::size_t from, PointMask covered) -> void {
    if (covered == x.all()) {
      if (out.size() >= bounds.max_covers) throw CapacityError("irredundant cover enumeration exceeded bound");
      out.push_back(chosen);
      return;
    }
    for (std::size_t i = from; i < opens.size(); ++i) {
      const PointMask o = opens[i];
      if (!(o & ~covered)) continue;
      bool ok = true;
      for (std::size_t c = 0; c < chosen.size() && ok; ++c) {
        PointMask others = o;
        for (std::size_t d = 0; d < chosen.size(); ++d)
          if (d != c) others |= chosen[d];
        ok = (chosen[c] & ~others) != 0;
      }
      if (!ok) continue;
      chosen.push_back(o);
      self(self, i + 1, covered | o);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  sort_finest_first(out);
  return out;
}

std::vector<OpenCover> all_covers(const FiniteSpace& x, const Bounds& bounds) {
  std::vector<PointMask> opens = x.opens(bounds);
  opens.erase(std::remove(opens.begin(), opens.end(), PointMask{0}), opens.end());
  if (opens.size() > 20) throw CapacityError("cover enumeration limited to 20 nonempty opens");
  std::vector<OpenCover> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << opens.size()); ++s) {
    PointMask un = 0;
    OpenCover u;
    for (std::size_t i = 0; i < opens.size(); ++i)
      if (s >> i & 1) {
        un |= opens[i];
        u.push_back(opens[i]);
      }
    if (un != x.all()) continue;
    if (out.size() >= bounds.max_covers) throw CapacityError("cover enumeration exceeded bound");
    out.push_back(make_cover(std::move(u)));
  }
  sort_finest_first(out);
  return out;
}

namespace {

// n_table of a window trace against every adversary; returns the index of the
// first adversary no window refines, or nullopt
std::optional<std::size_t> fill_table(TopVerdict& v, const std::vector<OpenCover>& adversaries) {
  for (std::size_t j = 0; j < adversaries.size(); ++j) {
    const long n = first_refining(v.windows, adversaries[j]);
    if (n < 0) {
      v.n_table.clear();
      return j;
    }
    v.n_table.emplace_back(adversaries[j], static_cast<std::size_t>(n));
  }
  return std::nullopt;
}

TopVerdict trace_cover(const FiniteSpace& x, const SpaceMap& h, const SpaceMap& h_inv, const OpenCover& u,
                       bool positive, const std::vector<OpenCover>& adversaries) {
  TopVerdict v;
  v.positive = positive;
  v.candidate = u;
  CoverCalc calc{&h, &h_inv};
  auto t = trace_windows(calc, u, positive);
  v.windows = std::move(t.windows);
  v.cycle_start = t.cycle_start;
  v.cycle_length = t.cycle_length;
  if (auto bad = fill_table(v, adversaries)) {
    v.status = Status::Refuted;
    v.refuter = adversaries[*bad];
  } else {
    v.status = Status::Proved;
    v.witness = u;
  }
  (void)x;
  return v;
}

TopVerdict search_covers(const FiniteSpace& x, const SpaceMap& h, bool positive, const Bounds& bounds) {
  check_homeomorphism(x, h);
  const SpaceMap h_inv = inverse(h);
  const auto covers = irredundant_covers(x, bounds);
  TopVerdict out;
  for (const auto& u : covers) {
    auto v = trace_cover(x, h, h_inv, u, positive, covers);
    if (v.proved()) {
      v.rejected = std::move(out.rejected);
      return v;
    }
    out.rejected.emplace_back(u, *v.refuter);
  }
  out.positive = positive;
  out.status = Status::Refuted;
  if (!out.rejected.empty()) out.refuter = out.rejected.front().second;
  return out;
}

}  // namespace

TopVerdict is_expansivity_cover(const FiniteSpace& x, const SpaceMap& h, const OpenCover& u, bool positive,
                                const Bounds& bounds) {
  check_homeomorphism(x, h);
  if (!is_cover(x, u)) throw DomainError("candidate is not an open cover");
  return trace_cover(x, h, inverse(h), u, positive, irredundant_covers(x, bounds));
}

TopVerdict is_refinement_expansive(const FiniteSpace& x, const SpaceMap& h, const Bounds& bounds) {
  return search_covers(x, h, false, bounds);
}

TopVerdict is_positively_expansive_top(const FiniteSpace& x, const SpaceMap& h, const Bounds& bounds) {
  return search_covers(x, h, true, bounds);
}

TopVerdict is_positively_expansive_single_power(const FiniteSpace& x, const SpaceMap& h, const Bounds& bounds) {
  check_space_map(x, h);
  check_homeomorphism(x, h);
  const auto covers = irredundant_covers(x, bounds);
  TopVerdict out;
  out.positive = true;
  for (const auto& u : covers) {
    // h^{-n}(U) is periodic in n; one period lists every cover that occurs
    TopVerdict v;
    v.positive = true;
    v.candidate = u;
    OpenCover cur = normalize_cover(u);
    std::set<OpenCover> seen;
    while (seen.insert(cur).second) {
      v.windows.push_back(cur);
      cur = normalize_cover(preimage_cover(h, cur));
    }
    v.cycle_start = 0;
    v.cycle_length = v.windows.size();
    if (auto bad = fill_table(v, covers)) {
      out.rejected.emplace_back(u, covers[*bad]);
      continue;
    }
    v.status = Status::Proved;
    v.witness = u;
    v.note = "single-power form";
    v.rejected = std::move(out.rejected);
    return v;
  }
  out.status = Status::Refuted;
  if (!out.rejected.empty()) out.refuter = out.rejected.front().second;
  return out;
}

TopVerdict has_minimal_cover(const FiniteSpace& x, const Bounds& bounds) {
  const auto covers = irredundant_covers(x, bounds);
  TopVerdict out;
  for (const auto& u : covers) {
    auto bad = std::find_if(covers.begin(), covers.end(), [&](const OpenCover& w) { return !cover_refines(u, w); });
    if (bad == covers.end()) {
      out.status = Status::Proved;
      out.candidate = out.witness = u;
      out.windows.push_back(u);
      for (const auto& w : covers) out.n_table.emplace_back(w, 0);
      out.rejected.clear();
      return out;
    }
    out.rejected.emplace_back(u, *bad);
  }
  out.status = Status::Refuted;
  if (!out.rejected.empty()) out.refuter = out.rejected.front().second;
  return out;
}

ExtensionVerdict is_extension_closed(const FiniteSpace& x, PointMask y, const Bounds& bounds) {
  if (y & ~x.all()) throw DomainError("subspace has points outside the space");
  const auto opens = x.opens(bounds);
  const FiniteSpace sub = x.subspace(y);
  std::vector<std::size_t> pts;
  for (PointMask t = y; t; t &= t - 1) pts.push_back(static_cast<std::size_t>(std::countr_zero(t)));
  auto lift = [&](PointMask local) {
    PointMask out = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (local >> i & 1) out |= bit(pts[i]);
    return out;
  };
  ExtensionVerdict v;
  v.status = Status::Proved;
  for (const auto& local : irredundant_covers(sub, bounds)) {
    OpenCover cover_y, ext;
    PointMask un = 0;
    for (PointMask m : local) {
      const PointMask trace = lift(m);
      PointMask maximal = 0;
      for (PointMask o : opens)
        if ((o & y) == trace) maximal |= o;
      cover_y.push_back(trace);
      ext.push_back(maximal);
      un |= maximal;
    }
    if (un != x.all()) {
      v.status = Status::Refuted;
      v.failing = make_cover(cover_y);
      v.extensions.clear();
      return v;
    }
    // keep member order aligned: U_i and V_i at the same position
    v.extensions.emplace_back(std::move(cover_y), std::move(ext));
  }
  return v;
}

std::vector<FiniteSpace> enumerate_posets(std::size_t n) {
  if (n > 6) throw CapacityError("poset enumeration limited to 6 points");
  // canonical code: least relation matrix over all relabelings
  auto code_of = [](const std::vector<PointMask>& down) {
    const std::size_t m = down.size();
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t c = 0;
      for (std::size_t q = 0; q < m; ++q)
        for (std::size_t p = 0; p < m; ++p)
          if (down[perm[q]] >> perm[p] & 1) c |= std::uint64_t{1} << (q * m + p);
      best = std::min(best, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  std::vector<std::vector<PointMask>> level{{}};
  for (std::size_t m = 1; m <= n; ++m) {
    std::map<std::uint64_t, std::vector<PointMask>> next;
    for (const auto& down : level) {
      const FiniteSpace s = FiniteSpace::from_order(
          down.size(), [&](std::size_t p, std::size_t q) { return down[q] >> p & 1; });
      for (PointMask d : s.opens(Bounds{.max_space_points = 64})) {
        auto grown = down;
        grown.push_back(d | bit(m - 1));
        next.emplace(code_of(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, down] : next) level.push_back(std::move(down));
  }
  std::vector<FiniteSpace> out;
  for (const auto& down : level)
    out.push_back(FiniteSpace::from_order(down.size(), [&](std::size_t p, std::size_t q) { return down[q] >> p & 1; }));
  return out;
}

}  // namespace ringexp
