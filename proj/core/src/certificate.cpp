#include "ringexp/certificate.hpp"

#include "ringexp/errors.hpp"
#include "ringexp/io/json.hpp"
#include "ringexp/io/ring_file.hpp"
#include "ringexp/window.hpp"

#include <algorithm>
#include <set>

namespace ringexp {

namespace cert {

json finite_payload(const RingPtr& ring, const RingAutomorphism* alpha, const std::string& mode,
                    const std::string& scope, const FiniteVerdict& v) {
  json ctx{{"ring", io::ring_to_json(*ring)}, {"mode", mode}, {"scope", scope}};
  ctx["automorphism"] = alpha ? io::automorphism_json(*alpha) : json(nullptr);
  return json{{"kind", "finite"}, {"context", std::move(ctx)}, {"verdict", io::verdict_json(v)}};
}

json decomposition_payload(const RingPtr& ring, const LocalDecomposition& d) {
  return json{{"kind", "decomposition"},
              {"context", {{"ring", io::ring_to_json(*ring)}}},
              {"verdict",
               {{"idempotents", d.idempotents},
                {"generator", io::generator_json(d.strong_minimal_generator)},
                {"maximal_count", d.maximal_count},
                {"degenerate", d.degenerate}}}};
}

json doubling_payload(const RingAutomorphism& alpha, const GeneratorSet& i, std::size_t depth, const DoublingReport& r) {
  return json{{"kind", "doubling"},
              {"context",
               {{"ring", io::ring_to_json(*alpha.host())},
                {"automorphism", io::automorphism_json(alpha)},
                {"generator", io::generator_json(i)},
                {"depth", depth}}},
              {"verdict", {{"N", r.N}, {"J", io::generator_json(r.J)}, {"holds", r.holds}, {"maps", r.maps}}}};
}

json count_maximals_payload(const GeneratorSet& j, const GeneratorSet& k, std::size_t n, bool holds) {
  return json{{"kind", "count_maximals"},
              {"context",
               {{"ring", io::ring_to_json(*j.host())},
                {"J", io::generator_json(j)},
                {"K", io::generator_json(k)},
                {"N", n}}},
              {"verdict", {{"holds", holds}}}};
}

json sym_criterion_payload(const SymGenerator& i, bool value) {
  json v{{"value", value}};
  if (!value) {
    // a member with two zero exponents escapes {(p_a),(p_b)} on {a, b}
    const std::size_t k = i.k();
    for (const auto& m : i.members()) {
      if (m.bottom) continue;
      std::vector<std::size_t> z;
      for (std::size_t c = 0; c < k && z.size() < 2; ++c)
        if (m.e[c] == 0) z.push_back(c);
      if (z.size() < 2) continue;
      std::vector<ExponentIdeal> js;
      for (auto c : z) {
        std::vector<std::uint32_t> e(k, 0);
        e[c] = 1;
        js.push_back(ExponentIdeal::of(e));
      }
      v["refuter"] = io::sym_generator_json(SymGenerator(k, js));
      v["zero_set"] = z;
      break;
    }
  }
  return json{{"kind", "sym_criterion"},
              {"context", {{"k", i.k()}, {"generator", io::sym_generator_json(i)}}},
              {"verdict", std::move(v)}};
}

json sym_oracle_payload(const SymGenerator& i, const SymOracleOptions& opt, const SymOracleResult& r) {
  json v = io::verdict_json(r.verdict);
  v["pool_size"] = r.pool->size();
  v["table_digest"] = io::hex64(io::bytes_digest(*r.n_table));
  v["escape_zero_set"] = r.escape_zero_set;
  return json{{"kind", "sym_oracle"},
              {"context",
               {{"k", i.k()},
                {"perm", r.perm},
                {"generator", io::sym_generator_json(i)},
                {"positive", opt.positive},
                {"n_max", opt.n_max},
                {"adversary_bound", opt.adversary_bound}}},
              {"verdict", std::move(v)}};
}

json sym_minimal_payload(std::size_t k, const SymGenerator& candidate, const SymGenerator& certificate) {
  return json{{"kind", "sym_minimal"},
              {"context", {{"k", k}, {"candidate", io::sym_generator_json(candidate)}}},
              {"verdict",
               {{"status", k == 1 ? "Proved" : "Refuted"}, {"certificate", io::sym_generator_json(certificate)}}}};
}

json top_payload(const FiniteSpace& x, const SpaceMap& h, const std::string& mode, const TopVerdict& v) {
  return json{{"kind", "top"},
              {"context", {{"space", io::space_json(x)}, {"map", h.f}, {"mode", mode}}},
              {"verdict", io::verdict_json(v)}};
}

json extension_payload(const FiniteSpace& x, PointMask y, const ExtensionVerdict& v) {
  json ext = json::array();
  for (const auto& [cy, cx] : v.extensions) {
    // members stay aligned, so serialize them without re-sorting
    json a = json::array(), b = json::array();
    for (PointMask m : cy) a.push_back(io::cover_json({m})[0]);
    for (PointMask m : cx) b.push_back(io::cover_json({m})[0]);
    ext.push_back(json::array({a, b}));
  }
  std::vector<std::size_t> pts;
  for (std::size_t p = 0; p < 64; ++p)
    if (y >> p & 1) pts.push_back(p);
  return json{{"kind", "extension"},
              {"context", {{"space", io::space_json(x)}, {"subspace", pts}}},
              {"verdict",
               {{"status", to_string(v.status)},
                {"extensions", std::move(ext)},
                {"failing", v.failing ? io::cover_json(*v.failing) : json(nullptr)}}}};
}

json chain_payload(const std::string& mode, std::int64_t step, std::int64_t m, std::size_t n_max,
                   const ChainVerdict& v) {
  return json{{"kind", "chain"},
              {"context", {{"mode", mode}, {"step", step}, {"m", m}, {"n_max", n_max}}},
              {"verdict", io::verdict_json(v)}};
}

}  // namespace cert

namespace {

using nlohmann::json;

struct CheckFailed {
  std::string reason;
};

void require(bool cond, const std::string& why) {
  if (!cond) throw CheckFailed{why};
}

Status verdict_status(const json& v) { return io::status_from_string(v.at("status").get<std::string>()); }

// Least window index refining every target, compared with the payload's
// n_table (entrywise when embedded, by count and digest otherwise). `dumps`
// holds the compact encoding of each target.
template <class F, class Refines>
void check_table_dumped(const json& v, const std::vector<F>& windows, const std::vector<F>& targets,
                        const std::vector<std::string>& dumps, Refines refines) {
  std::vector<std::pair<std::string, std::size_t>> entries;
  entries.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    std::size_t n = 0;
    while (n < windows.size() && !refines(windows[n], targets[i])) ++n;
    require(n < windows.size(), "no window refines target " + dumps[i]);
    entries.emplace_back(dumps[i], n);
  }
  require(v.at("n_table_size").get<std::size_t>() == entries.size(), "n_table size differs from the target count");
  if (v.contains("n_table")) {
    std::map<std::string, std::size_t> claimed;
    for (const auto& e : v.at("n_table")) claimed[e.at("target").dump()] = e.at("n").get<std::size_t>();
    require(claimed.size() == entries.size(), "n_table lists a target twice");
    for (const auto& [f, n] : entries) {
      auto it = claimed.find(f);
      require(it != claimed.end(), "n_table misses target " + f);
      require(it->second == n, "n_table entry for " + f + " is not the least refining index");
    }
  }
  require(v.at("n_table_digest").get<std::string>() == io::hex64(io::table_digest_keyed(std::move(entries))),
          "n_table digest mismatch");
}

template <class F, class Refines, class Enc>
void check_table(const json& v, const std::vector<F>& windows, const std::vector<F>& targets, Refines refines, Enc enc) {
  std::vector<std::string> dumps;
  dumps.reserve(targets.size());
  for (const auto& t : targets) dumps.push_back(enc(t).dump());
  check_table_dumped(v, windows, targets, dumps, refines);
}

template <class F, class Parse>
std::vector<F> parse_list(const json& arr, Parse parse) {
  std::vector<F> out;
  for (const auto& e : arr) out.push_back(parse(e));
  return out;
}

// ---------------------------------------------------------------- finite

struct GenCalc {
  using Family = GeneratorSet;
  const RingAutomorphism* alpha;
  const RingAutomorphism* inv;
  Family normalize(const Family& a) const { return normalize_antichain(a); }
  Family product(const Family& a, const Family& b) const { return gen_product(a, b); }
  Family pull(const Family& a, int dir) const { return pullback(dir > 0 ? *alpha : *inv, a); }
};

struct RingCtx {
  RingPtr ring;
  std::unique_ptr<IdealLattice> lat;
  std::vector<GeneratorSet> antichains;
};

// Antichain generators by plain subset recursion over lattice indices.
std::vector<GeneratorSet> antichain_generators_plain(const IdealLattice& lat) {
  std::vector<GeneratorSet> out;
  std::vector<std::size_t> cur;
  const std::size_t m = lat.size();
  auto rec = [&](auto&& self, std::size_t from, std::size_t acc) -> void {
    if (!cur.empty() && acc == lat.whole_index()) {
      std::vector<Ideal> ideals;
      for (auto i : cur) ideals.push_back(lat[i]);
      out.push_back(GeneratorSet::make(lat.ring(), std::move(ideals)));
    }
    for (std::size_t i = from; i < m; ++i) {
      bool free = true;
      for (auto c : cur) free = free && !lat.leq(c, i) && !lat.leq(i, c);
      if (!free) continue;
      cur.push_back(i);
      self(self, i + 1, cur.size() == 1 ? i : lat.sum(acc, i));
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_whole(const GeneratorSet& g) {
  return std::any_of(g.ideals().begin(), g.ideals().end(), [](const Ideal& i) { return i.is_whole(); });
}

}  // namespace

struct SpaceCtx {
  FiniteSpace x;
  std::vector<OpenCover> covers;  ///< irredundant
  std::vector<std::string> dumps;
  std::set<OpenCover> cover_set;
};

struct CertificateChecker::Impl {
  Bounds bounds;
  std::map<std::string, std::shared_ptr<RingCtx>> rings;
  std::map<std::string, std::shared_ptr<const SpaceCtx>> spaces;

  std::shared_ptr<const SpaceCtx> space_ctx(const json& j) {
    auto& slot = spaces[j.dump()];
    if (!slot) {
      auto c = std::make_shared<SpaceCtx>();
      c->x = io::space_from_json(j);
      c->covers = irredundant_covers(c->x, bounds);
      for (const auto& u : c->covers) c->dumps.push_back(io::cover_json(u).dump());
      c->cover_set.insert(c->covers.begin(), c->covers.end());
      slot = std::move(c);
    }
    return slot;
  }
  std::map<std::string, std::vector<std::uint8_t>> sym_tables;

  std::shared_ptr<RingCtx> ring_ctx(const json& j) {
    auto& slot = rings[j.dump()];
    if (!slot) {
      slot = std::make_shared<RingCtx>();
      slot->ring = io::ring_from_json(j, bounds);
      slot->lat = std::make_unique<IdealLattice>(slot->ring, bounds);
      slot->antichains = antichain_generators_plain(*slot->lat);
    }
    return slot;
  }

  void check(const json& p) {
    const auto kind = p.at("kind").get<std::string>();
    const json& ctx = p.at("context");
    const json& v = p.at("verdict");
    if (kind == "finite") return check_finite(ctx, v);
    if (kind == "decomposition") return check_decomposition(ctx, v);
    if (kind == "doubling") return check_doubling(ctx, v);
    if (kind == "count_maximals") return check_count(ctx, v);
    if (kind == "sym_criterion") return check_sym_criterion(ctx, v);
    if (kind == "sym_oracle") return check_sym_oracle(ctx, v);
    if (kind == "sym_minimal") return check_sym_minimal(ctx, v);
    if (kind == "top") return check_top(ctx, v);
    if (kind == "extension") return check_extension(ctx, v);
    if (kind == "chain") return check_chain(ctx, v);
    throw CheckFailed{"unknown payload kind: " + kind};
  }

  // ---- finite rings

  void check_finite(const json& ctx, const json& v) {
    const auto rc = ring_ctx(ctx.at("ring"));
    const RingPtr& r = rc->ring;
    const auto mode = ctx.at("mode").get<std::string>();
    const auto scope = ctx.at("scope").get<std::string>();
    auto parse = [&](const json& j) { return io::generator_from_json(r, j); };
    auto enc = [](const GeneratorSet& g) { return io::generator_json(g); };
    const Status st = verdict_status(v);
    const auto& targets = rc->antichains;

    if (mode == "zero") {
      for (const auto& pr : v.at("rejected")) {
        const auto c = parse(pr.at("candidate"));
        const auto f = parse(pr.at("refuter"));
        require(!refines(c, f), "rejected candidate refines its refuter");
      }
      if (st == Status::Proved) {
        const auto w = parse(v.at("witness"));
        check_table(v, std::vector<GeneratorSet>{w}, targets, refines, enc);
      } else {
        require(v.at("rejected").size() == targets.size(), "zero-expansivity refutation must reject every antichain");
        std::set<GeneratorSet> seen;
        for (const auto& pr : v.at("rejected")) seen.insert(parse(pr.at("candidate")));
        require(seen == std::set<GeneratorSet>(targets.begin(), targets.end()), "rejected set is not every antichain");
      }
      return;
    }
    require(mode == "expansive" || mode == "positive", "unknown finite mode: " + mode);
    const bool positive = mode == "positive";
    require(v.at("positive").get<bool>() == positive, "mode and verdict disagree on positivity");
    const auto alpha = io::automorphism_from_json(r, ctx.at("automorphism"));
    const auto inv = alpha.inverse();
    GenCalc calc{&alpha, &inv};

    auto replay = [&](const GeneratorSet& c) { return trace_windows(calc, c, positive); };
    auto check_pair = [&](const GeneratorSet& c, const GeneratorSet& f) {
      require(is_generator(r, f.ideals()), "refuter is not a generator");
      if (contains_whole(c) && !contains_whole(f)) return;  // every window keeps R
      const auto t = replay(c);
      for (const auto& w : t.windows) require(!refines(w, f), "a window refines the claimed refuter");
    };

    if (!v.at("witness").is_null()) {
      const auto w = parse(v.at("witness"));
      const auto t = replay(w);
      const auto claimed = parse_list<GeneratorSet>(v.at("windows"), parse);
      require(claimed == t.windows, "windows differ from the replay");
      require(v.at("cycle_start").get<std::size_t>() == t.cycle_start &&
                  v.at("cycle_length").get<std::size_t>() == t.cycle_length,
              "cycle data differ from the replay");
      check_table(v, t.windows, targets, refines, enc);
    } else {
      require(st != Status::Proved, "Proved without a witness");
    }
    for (const auto& pr : v.at("rejected")) check_pair(parse(pr.at("candidate")), parse(pr.at("refuter")));
    if (st == Status::Refuted) {
      if (scope == "search") {
        std::set<GeneratorSet> seen;
        for (const auto& pr : v.at("rejected")) seen.insert(parse(pr.at("candidate")));
        require(seen == std::set<GeneratorSet>(targets.begin(), targets.end()),
                "refutation does not reject every antichain candidate");
      } else {
        check_pair(parse(v.at("candidate")), parse(v.at("refuter")));
      }
    }
  }

  void check_decomposition(const json& ctx, const json& v) {
    const auto rc = ring_ctx(ctx.at("ring"));
    const RingPtr& r = rc->ring;
    const FiniteRing& R = *r;
    const auto es = v.at("idempotents").get<std::vector<Elem>>();
    const auto g = io::generator_from_json(r, v.at("generator"));
    require(v.at("maximal_count").get<std::size_t>() == rc->lat->maximal().size(), "maximal count is wrong");
    if (R.is_trivial()) {
      require(es.empty() && g.size() == 1 && g.ideals()[0].is_whole(), "trivial ring must give {R}");
      return;
    }
    require(es.size() == rc->lat->maximal().size(), "factor count differs from the number of maximal ideals");
    Elem sum = R.zero();
    std::vector<Ideal> factors;
    for (std::size_t a = 0; a < es.size(); ++a) {
      const Elem e = es[a];
      require(e < R.order() && e != R.zero() && R.mul(e, e) == e, "not a nonzero idempotent");
      for (std::size_t b = a + 1; b < es.size(); ++b) require(R.mul(e, es[b]) == R.zero(), "idempotents not orthogonal");
      sum = R.add(sum, e);
      factors.push_back(principal_ideal(r, e));
      // R e is local: its non-units are closed under addition
      const Ideal& f = factors.back();
      std::vector<Elem> non_units;
      for (Elem x : f.elements()) {
        bool unit = false;
        for (Elem y : f.elements()) unit = unit || R.mul(x, y) == e;
        if (!unit) non_units.push_back(x);
      }
      ElementSet nu = ElementSet::of(R.order(), non_units);
      for (Elem x : non_units)
        for (Elem y : non_units) require(nu.contains(R.add(x, y)), "a factor R e is not local");
    }
    require(sum == R.one(), "idempotents do not sum to 1");
    require(g == GeneratorSet::make(r, factors), "generator is not {R e_i}");
    // each R e_i local and R = prod R e_i: for any generator J, the ideals
    // J e_i sum to R e_i, so one of them is all of R e_i
  }

  // windows P_0..P_last of the positive sequence, computed step by step
  static std::vector<GeneratorSet> positive_prefix(const GenCalc& calc, const GeneratorSet& i, std::size_t last) {
    std::vector<GeneratorSet> out{calc.normalize(i)};
    while (out.size() <= last) out.push_back(calc.normalize(calc.product(out.front(), calc.pull(out.back(), +1))));
    return out;
  }

  void check_doubling(const json& ctx, const json& v) {
    const auto rc = ring_ctx(ctx.at("ring"));
    const RingPtr& r = rc->ring;
    const auto alpha = io::automorphism_from_json(r, ctx.at("automorphism"));
    const auto inv = alpha.inverse();
    GenCalc calc{&alpha, &inv};
    const auto i = io::generator_from_json(r, ctx.at("generator"));
    const auto depth = ctx.at("depth").get<std::size_t>();
    const auto n0 = v.at("N").get<std::size_t>();
    const auto win = positive_prefix(calc, i, n0 + depth);
    const auto in = normalize_antichain(i);
    for (std::size_t n = 0; n < n0; ++n) require(!refines(pullback(alpha, win[n]), in), "N is not the least index");
    require(refines(pullback(alpha, win[n0]), in), "alpha^{-1}(I_N) does not refine I");
    const auto j = io::generator_from_json(r, v.at("J"));
    require(j == win[n0], "J differs from I_N");
    const auto& maps = v.at("maps");
    require(maps.size() == depth + 1 && v.at("holds").size() == depth + 1, "certificate depth mismatch");
    GeneratorSet jp = j;
    for (std::size_t n = 0; n <= depth; ++n) {
      GeneratorSet lhs = jp;
      for (std::size_t s = 0; s < n; ++s) lhs = pullback(alpha, lhs);
      const GeneratorSet& rhs = win[n0 + n];
      const auto map = maps[n].get<std::vector<std::size_t>>();
      require(map.size() == lhs.size(), "refinement map has the wrong length");
      for (std::size_t a = 0; a < map.size(); ++a)
        require(map[a] < rhs.size() && lhs.ideals()[a].subset_of(rhs.ideals()[map[a]]), "refinement map entry is wrong");
      require(v.at("holds")[n].get<bool>(), "certificate records a failure");
      jp = normalize_antichain(gen_product(jp, jp));
    }
  }

  void check_count(const json& ctx, const json& v) {
    const auto rc = ring_ctx(ctx.at("ring"));
    const RingPtr& r = rc->ring;
    const auto j = io::generator_from_json(r, ctx.at("J"));
    const auto k = io::generator_from_json(r, ctx.at("K"));
    const auto n = ctx.at("N").get<std::size_t>();
    GeneratorSet p = GeneratorSet::make(r, {whole_ideal(r)});
    for (std::size_t s = 0; s < n; ++s) p = normalize_antichain(gen_product(p, j));
    require(refines(p, k), "J^N does not refine K");
    const auto& lat = *rc->lat;
    std::vector<Ideal> comp;
    for (auto m : lat.maximal()) {
      Ideal prod = whole_ideal(r);
      for (auto o : lat.maximal())
        if (o != m) prod = ideal_product(prod, lat[o]);
      comp.push_back(prod);
    }
    if (comp.empty()) comp.push_back(whole_ideal(r));
    require(refines(k, GeneratorSet::make(r, comp)), "K does not refine the complementary generator");
    const bool holds = lat.maximal().size() <= j.size();
    require(holds == v.at("holds").get<bool>(), "bound result differs");
    require(holds, "bound fails");
  }

  // ---- symbolic

  static bool escape_valid(const SymGenerator& i, const CoordPerm& perm, const SymGenerator& j,
                           const std::vector<std::size_t>& z) {
    if (z.empty()) return false;
    for (const auto& m : j.members())
      if (!m.bottom && std::none_of(z.begin(), z.end(), [&](std::size_t c) { return m.e[c] > 0; })) return false;
    const std::size_t ord = perm_order(perm);
    for (std::size_t rres = 0; rres < ord; ++rres) {
      bool found = false;
      for (const auto& a : i.members()) {
        if (a.bottom) continue;
        ExponentIdeal b = a;
        for (std::size_t s = 0; s < rres; ++s) b = sym_pull(b, perm);
        if (std::all_of(z.begin(), z.end(), [&](std::size_t c) { return b.e[c] == 0; })) found = true;
      }
      if (!found) return false;
    }
    return true;
  }

  void check_sym_criterion(const json& ctx, const json& v) {
    const auto k = ctx.at("k").get<std::size_t>();
    const auto i = io::sym_generator_from_json(k, ctx.at("generator"));
    require(sym_is_generator(i), "family does not generate");
    bool expect = true;
    if (k > 1) {
      for (const auto& m : i.members()) {
        if (m.bottom) continue;
        const auto zeros = static_cast<std::size_t>(std::count(m.e.begin(), m.e.end(), 0u));
        if (zeros > 1) expect = false;
      }
    }
    require(v.at("value").get<bool>() == expect, "criterion value is wrong");
    if (!expect) {
      const auto j = io::sym_generator_from_json(k, v.at("refuter"));
      require(sym_is_generator(j), "refuter does not generate");
      require(escape_valid(i, identity_perm(k), j, v.at("zero_set").get<std::vector<std::size_t>>()),
              "escape certificate is invalid");
    }
  }

  void check_sym_oracle(const json& ctx, const json& v) {
    const auto k = ctx.at("k").get<std::size_t>();
    const auto perm = ctx.at("perm").get<CoordPerm>();
    check_perm(perm, k);
    const auto i = io::sym_generator_from_json(k, ctx.at("generator"));
    const bool positive = ctx.at("positive").get<bool>();
    const auto n_max = ctx.at("n_max").get<std::size_t>();
    const auto b = ctx.at("adversary_bound").get<std::uint32_t>();
    require(sym_is_generator(i), "candidate does not generate");

    // exact windows, clamped to the grid and reduced to minimal vectors
    const auto exact = sym_windows(i, perm, positive, n_max);
    require(exact.size() == n_max + 1, "window count differs");
    std::vector<std::vector<std::vector<std::uint32_t>>> clamped;
    for (const auto& w : exact) {
      std::vector<std::vector<std::uint32_t>> pts;
      for (const auto& m : w.members()) {
        if (m.bottom) continue;
        std::vector<std::uint32_t> c = m.e;
        for (auto& x : c) x = std::min(x, b);
        pts.push_back(std::move(c));
      }
      std::vector<std::vector<std::uint32_t>> minimal;
      for (const auto& p : pts) {
        const bool dominated = std::any_of(pts.begin(), pts.end(), [&](const auto& q) {
          return q != p && std::equal(q.begin(), q.end(), p.begin(), [](auto x, auto y) { return x <= y; });
        });
        if (!dominated) minimal.push_back(p);
      }
      std::sort(minimal.begin(), minimal.end());
      minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
      clamped.push_back(std::move(minimal));
    }
    const auto& claimed = v.at("windows");
    require(claimed.size() == clamped.size(), "window count differs");
    for (std::size_t n = 0; n < clamped.size(); ++n) {
      std::vector<std::vector<std::uint32_t>> got;
      for (const auto& m : claimed[n]) {
        require(!m.value("bottom", false), "clamped window lists the zero ideal");
        got.push_back(m.at("exponents").get<std::vector<std::uint32_t>>());
      }
      std::sort(got.begin(), got.end());
      require(got == clamped[n], "clamped window " + std::to_string(n) + " differs from the exact replay");
    }

    const auto pool = SymAdversaryPool::get(k, b, bounds);
    require(v.at("pool_size").get<std::size_t>() == pool->size(), "adversary pool size differs");
    const std::string key = std::to_string(k) + "/" + std::to_string(b) + "/" + claimed.dump();
    auto& table = sym_tables[key];
    if (table.empty()) {
      std::vector<GridMask> ups;
      for (const auto& w : clamped) {
        std::vector<ExponentIdeal> members;
        for (const auto& p : w) members.push_back(ExponentIdeal::of(p));
        ups.push_back(pool->up_of(members));
      }
      table.assign(pool->size(), SymOracleResult::kNever);
      for (std::size_t j = 0; j < pool->size(); ++j)
        for (std::size_t n = 0; n < ups.size(); ++n)
          if (ups[n].subset_of(pool->up(j))) {
            table[j] = static_cast<std::uint8_t>(n);
            break;
          }
    }
    require(v.at("table_digest").get<std::string>() == io::hex64(io::bytes_digest(table)), "n_table digest mismatch");
    const bool never = std::find(table.begin(), table.end(), SymOracleResult::kNever) != table.end();
    const bool at_bound = std::find(table.begin(), table.end(), static_cast<std::uint8_t>(n_max)) != table.end();
    switch (verdict_status(v)) {
      case Status::Proved:
        require(!never && !at_bound, "Proved although an adversary is unrefined or needs N_max");
        break;
      case Status::Refuted: {
        const auto j = io::sym_generator_from_json(k, v.at("refuter"));
        require(sym_is_generator(j), "refuter does not generate");
        require(escape_valid(i, perm, j, v.at("escape_zero_set").get<std::vector<std::size_t>>()),
                "escape certificate is invalid");
        break;
      }
      case Status::UnknownAtBound:
        require(never || at_bound, "UnknownAtBound without an unrefined or boundary adversary");
        break;
    }
  }

  void check_sym_minimal(const json& ctx, const json& v) {
    const auto k = ctx.at("k").get<std::size_t>();
    const auto c = io::sym_generator_from_json(k, ctx.at("candidate"));
    const auto cert = io::sym_generator_from_json(k, v.at("certificate"));
    require(sym_is_generator(c) && sym_is_generator(cert), "families must generate");
    if (k == 1) {
      // in a local ring every generator contains R, so {R} refines all of them
      require(verdict_status(v) == Status::Proved, "k = 1 has a minimal generator");
      require(cert.contains_whole(), "k = 1 certificate must be {R}");
      return;
    }
    require(verdict_status(v) == Status::Refuted, "k >= 2 has no minimal generator");
    require(!sym_refines(c, cert), "candidate refines the certificate");
  }

  // ---- finite spaces

  void check_top(const json& ctx, const json& v) {
    const auto sc = space_ctx(ctx.at("space"));
    const FiniteSpace& x = sc->x;
    const auto& covers = sc->covers;
    const auto mode = ctx.at("mode").get<std::string>();
    auto parse = [](const json& j) { return io::cover_from_json(j); };
    const Status st = verdict_status(v);
    auto parse_cover = [&](const json& j) {
      auto u = parse(j);
      require(is_cover(x, u), "not an open cover: " + j.dump());
      return u;
    };
    auto all_rejected = [&]() {
      std::set<OpenCover> seen;
      for (const auto& pr : v.at("rejected")) seen.insert(parse(pr.at("candidate")));
      require(seen == sc->cover_set, "refutation does not reject every candidate");
    };
    if (mode == "minimal") {
      for (const auto& pr : v.at("rejected"))
        require(!cover_refines(parse_cover(pr.at("candidate")), parse_cover(pr.at("refuter"))),
                "rejected candidate refines its refuter");
      if (st == Status::Proved) {
        const auto w = parse_cover(v.at("witness"));
        check_table_dumped(v, std::vector<OpenCover>{w}, covers, sc->dumps, cover_refines);
      } else {
        all_rejected();
      }
      return;
    }
    const SpaceMap h{ctx.at("map").get<std::vector<std::size_t>>()};
    check_homeomorphism(x, h);
    const SpaceMap h_inv = inverse(h);
    const bool single = mode == "single_power";
    require(single || mode == "expansive" || mode == "positive", "unknown topological mode: " + mode);
    const bool positive = mode != "expansive";
    auto replay = [&](const OpenCover& u) {
      WindowTrace<OpenCover> t;
      if (single) {
        std::set<OpenCover> seen;
        OpenCover cur = normalize_cover(u);
        while (seen.insert(cur).second) {
          t.windows.push_back(cur);
          cur = normalize_cover(preimage_cover(h, cur));
        }
        t.cycle_length = t.windows.size();
        return t;
      }
      struct Calc {
        using Family = OpenCover;
        const SpaceMap* a;
        const SpaceMap* b;
        Family normalize(const Family& f) const { return normalize_cover(f); }
        Family product(const Family& f, const Family& g) const { return cover_wedge(f, g); }
        Family pull(const Family& f, int dir) const { return preimage_cover(dir > 0 ? *a : *b, f); }
      } calc{&h, &h_inv};
      return trace_windows(calc, u, positive);
    };
    auto check_pair = [&](const OpenCover& c, const OpenCover& f) {
      for (const auto& w : replay(c).windows) require(!cover_refines(w, f), "a window refines the claimed refuter");
    };
    if (!v.at("witness").is_null()) {
      const auto w = parse_cover(v.at("witness"));
      const auto t = replay(w);
      require(parse_list<OpenCover>(v.at("windows"), parse) == t.windows, "windows differ from the replay");
      require(v.at("cycle_start").get<std::size_t>() == t.cycle_start &&
                  v.at("cycle_length").get<std::size_t>() == t.cycle_length,
              "cycle data differ from the replay");
      check_table_dumped(v, t.windows, covers, sc->dumps, cover_refines);
    } else {
      require(st != Status::Proved, "Proved without a witness");
    }
    for (const auto& pr : v.at("rejected")) check_pair(parse_cover(pr.at("candidate")), parse_cover(pr.at("refuter")));
    if (st == Status::Refuted) all_rejected();
  }

  void check_extension(const json& ctx, const json& v) {
    const auto x = io::space_from_json(ctx.at("space"));
    PointMask y = 0;
    for (auto p : ctx.at("subspace").get<std::vector<std::size_t>>()) {
      require(p < x.size(), "subspace point out of range");
      y |= PointMask{1} << p;
    }
    const auto opens = x.opens(bounds);
    const auto sub = x.subspace(y);
    std::vector<std::size_t> pts;
    for (std::size_t p = 0; p < x.size(); ++p)
      if (y >> p & 1) pts.push_back(p);
    auto lift = [&](PointMask local) {
      PointMask out = 0;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (local >> i & 1) out |= PointMask{1} << pts[i];
      return out;
    };
    auto is_trace_open = [&](PointMask m) {
      return (m & ~y) == 0 && std::any_of(opens.begin(), opens.end(), [&](PointMask o) { return (o & y) == m; });
    };
    auto mask_of = [](const json& pts_json) {
      PointMask m = 0;
      for (const auto& p : pts_json) m |= PointMask{1} << p.get<std::size_t>();
      return m;
    };
    if (verdict_status(v) == Status::Refuted) {
      const auto f = io::cover_from_json(v.at("failing"));
      PointMask un = 0, cov = 0;
      for (PointMask m : f) {
        require(is_trace_open(m), "failing family member is not open in the subspace");
        cov |= m;
        for (PointMask o : opens)
          if ((o & y) == m) un |= o;
      }
      require(cov == y, "failing family does not cover the subspace");
      require(un != x.all(), "the maximal extensions cover the space");
      return;
    }
    std::set<OpenCover> expected;
    for (const auto& local : irredundant_covers(sub, bounds)) {
      std::vector<PointMask> lifted;
      for (PointMask m : local) lifted.push_back(lift(m));
      expected.insert(make_cover(std::move(lifted)));
    }
    std::set<OpenCover> seen;
    for (const auto& pr : v.at("extensions")) {
      std::vector<PointMask> cy, cx;
      for (const auto& m : pr.at(0)) cy.push_back(mask_of(m));
      for (const auto& m : pr.at(1)) cx.push_back(mask_of(m));
      require(cy.size() == cx.size(), "extension has a different member count");
      PointMask un = 0;
      for (std::size_t a = 0; a < cy.size(); ++a) {
        require(x.is_open(cx[a]), "extension member is not open");
        require((cx[a] & y) == cy[a], "extension member does not restrict to its partner");
        un |= cx[a];
      }
      require(un == x.all(), "extension does not cover the space");
      seen.insert(make_cover(cy));
    }
    require(seen == expected, "extensions do not list every irredundant cover of the subspace");
  }

  // ---- chain space

  static std::pair<std::vector<ChainCover>, bool> chain_replay(std::int64_t step, const ChainCover& u,
                                                              std::size_t n_max) {
    const ChainCover base = chain_normalize(u);
    std::vector<ChainCover> w{base};
    while (w.size() <= n_max) {
      ChainCover next = chain_normalize(chain_wedge(base, chain_pull(w.back(), step)));
      if (next == w.back()) return {w, true};
      w.push_back(std::move(next));
    }
    return {w, false};
  }

  void check_chain(const json& ctx, const json& v) {
    const auto mode = ctx.at("mode").get<std::string>();
    const auto step = ctx.at("step").get<std::int64_t>();
    const auto m = ctx.at("m").get<std::int64_t>();
    const auto n_max = ctx.at("n_max").get<std::size_t>();
    auto parse = [](const json& j) {
      auto u = io::chain_cover_from_json(j);
      require(chain_is_cover(u), "not a cover of X: " + j.dump());
      return u;
    };
    auto enc = [](const ChainCover& u) { return io::chain_cover_json(u); };
    const Status st = verdict_status(v);
    auto refuted_by_fixpoint = [&](const ChainCover& c, const ChainCover& f) {
      const auto [w, fix] = chain_replay(step, c, n_max);
      require(fix, "windows of " + chain_str(c) + " do not reach a fixpoint");
      for (const auto& x : w) require(!chain_refines(x, f), "a window refines the claimed refuter");
    };
    auto rejected_set = [&]() {
      std::set<ChainCover> s;
      for (const auto& pr : v.at("rejected")) s.insert(parse(pr.at("candidate")));
      return s;
    };
    if (mode == "minimal") {
      require(st == Status::Refuted, "minimal-cover payloads are refutations");
      const auto cands = chain_irredundant_covers(-m, m);
      require(rejected_set() == std::set<ChainCover>(cands.begin(), cands.end()), "not every candidate is rejected");
      for (const auto& pr : v.at("rejected"))
        require(!chain_refines(parse(pr.at("candidate")), parse(pr.at("refuter"))), "candidate refines its certificate");
      return;
    }
    if (mode == "sweep" && st == Status::Refuted) {
      const auto cands = chain_irredundant_covers(-(m - 1), m - 1);
      require(rejected_set() == std::set<ChainCover>(cands.begin(), cands.end()), "not every candidate is rejected");
      for (const auto& pr : v.at("rejected")) refuted_by_fixpoint(parse(pr.at("candidate")), parse(pr.at("refuter")));
      return;
    }
    require(mode == "positive" || mode == "sweep", "unknown chain mode: " + mode);
    const auto c = parse(v.at("candidate"));
    const auto [w, fix] = chain_replay(step, c, n_max);
    require(parse_list<ChainCover>(v.at("windows"), parse) == w, "windows differ from the replay");
    if (st == Status::Proved) {
      check_table(v, w, chain_irredundant_covers(-m, m), chain_refines, enc);
    } else if (st == Status::Refuted) {
      refuted_by_fixpoint(c, parse(v.at("refuter")));
    } else {
      require(!fix, "UnknownAtBound although the windows reach a fixpoint");
    }
  }
};

CertificateChecker::CertificateChecker(const Bounds& bounds) : impl_(std::make_unique<Impl>()) {
  impl_->bounds = bounds;
}

CertificateChecker::~CertificateChecker() = default;

CheckResult CertificateChecker::check(const nlohmann::json& payload) {
  try {
    impl_->check(payload);
    return {};
  } catch (const CheckFailed& f) {
    return {false, f.reason};
  } catch (const Error& e) {
    return {false, e.what()};
  } catch (const nlohmann::json::exception& e) {
    return {false, std::string("malformed payload: ") + e.what()};
  }
}

CheckResult check_certificate(const nlohmann::json& payload, const Bounds& bounds) {
  CertificateChecker c(bounds);
  return c.check(payload);
}

}  // namespace ringexp
