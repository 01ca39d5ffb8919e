#include "common.hpp"

#include "ringexp/certificate.hpp"
#include "ringexp/chain.hpp"
#include "ringexp/expansivity.hpp"
#include "ringexp/generators.hpp"
#include "ringexp/ideal.hpp"
#include "ringexp/lattice.hpp"
#include "ringexp/suites/catalog.hpp"
#include "ringexp/topology.hpp"
#include "ringexp/zariski.hpp"

#include <bit>

namespace ringexp::suites {

using detail::finish;
using detail::make_report;
using detail::Stopwatch;

SuiteReport run_zariski_suite(const SuiteOptions& opt) {
  Stopwatch watch;
  auto rep = make_report(8);
  const auto bounds = suite_bounds();
  std::size_t subsets = 0, converse_exp = 0, converse_pos = 0, maps = 0;
  for (const auto& nr : catalog_with_cyclic(60)) {
    const auto& r = nr.ring;
    ExpansivityEngine eng(r, bounds);
    const auto& lat = eng.lattice();
    const Spectrum s = spectrum(lat);
    const FiniteSpace& x = s.space;
    const std::size_t m = lat.size();
    std::vector<PointMask> u(m);
    for (std::size_t i = 0; i < m; ++i) u[i] = zariski_open(lat, s, i);

    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const auto sum = lat.index_of(ideal_sum(lat[i], lat[j]));
        const auto prod = lat.index_of(ideal_product(lat[i], lat[j]));
        rep.expect(u[sum] == (u[i] | u[j]), nr.name + ": U over a sum");
        rep.expect(u[prod] == (u[i] & u[j]), nr.name + ": U over a product");
      }

    // cover <=> generator on every family of ideals (families of size <= 4 above 16 ideals)
    const bool every = m <= 16;
    for (std::uint64_t f = 1; f < (std::uint64_t{1} << m); ++f) {
      if (!every && std::popcount(f) > 4) continue;
      ++subsets;
      std::vector<Ideal> ideals;
      std::vector<PointMask> opens;
      for (std::size_t i = 0; i < m; ++i)
        if (f >> i & 1) {
          ideals.push_back(lat[i]);
          opens.push_back(u[i]);
        }
      rep.expect(is_generator(r, ideals) == is_cover(x, make_cover(opens)), nr.name + ": cover and generator differ");
    }

    if (auto d = eng.strong_minimal_generator(); std::holds_alternative<LocalDecomposition>(d)) {
      const auto mc = has_minimal_cover(x, bounds);
      rep.expect(mc.proved(), nr.name + ": minimal generator but no minimal cover");
      rep.keep(cert::top_payload(x, identity_map(x.size()), "minimal", mc), opt);
    }

    const auto auts = automorphisms_of(r);
    std::vector<SpaceMap> sm;
    for (const auto& a : auts) sm.push_back(spec_map(lat, s, a));
    for (std::size_t a = 0; a < auts.size(); ++a) {
      const auto& alpha = auts[a];
      const auto& h = sm[a];
      ++maps;
      rep.expect(is_homeomorphism(x, h), nr.name + ": spec map is not a homeomorphism");
      if (alpha.is_identity()) rep.expect(h == identity_map(x.size()), nr.name + ": spec(id) is not the identity");
      for (std::size_t b = 0; b < auts.size(); ++b)
        rep.expect(spec_map(lat, s, alpha.compose(auts[b])) == compose(sm[b], h),
                   nr.name + ": spec is not contravariant");
      for (std::size_t i = 0; i < m; ++i)
        rep.expect(preimage_set(h, u[i]) == u[lat.index_of(image(alpha, lat[i]))],
                   nr.name + ": h^{-1}(U_I) differs from U_{alpha(I)}");

      const auto e = eng.is_expansive(alpha);
      const auto te = is_refinement_expansive(x, h, bounds);
      if (e.proved()) {
        rep.expect(te.proved(), nr.name + ": expansive automorphism with non-expansive spec map");
        rep.expect(is_expansivity_cover(x, h, zariski_cover(lat, s, *e.witness), false, bounds).proved(),
                   nr.name + ": image of the expansive generator is not an expansive cover");
      }
      converse_exp += te.proved() && !e.proved();
      rep.keep(cert::top_payload(x, h, "expansive", te), opt);

      const SpaceMap h_inv = spec_map(lat, s, alpha.inverse());
      const auto p = eng.is_positively_expansive(alpha);
      const auto tp = is_positively_expansive_top(x, h_inv, bounds);
      if (p.proved()) {
        rep.expect(tp.proved(), nr.name + ": positive automorphism with non-positive spec(alpha^{-1})");
        rep.expect(is_expansivity_cover(x, h_inv, zariski_cover(lat, s, *p.witness), true, bounds).proved(),
                   nr.name + ": image of the positive generator is not a positive cover");
      }
      converse_pos += tp.proved() && !p.proved();
      rep.keep(cert::top_payload(x, h_inv, "positive", tp), opt);
    }

    const auto ev = is_extension_closed(x, s.maximal_points(), bounds);
    rep.expect(ev.status == Status::Proved, nr.name + ": specm is not extension-closed");
    rep.keep(cert::extension_payload(x, s.maximal_points(), ev), opt);
  }

  for (std::size_t k = 1; k <= 4; ++k) {
    const Spectrum s = sym_spectrum(k);
    const auto ev = is_extension_closed(s.space, s.maximal_points(), bounds);
    rep.expect(ev.status == Status::Proved, "symbolic k=" + std::to_string(k) + ": specm is not extension-closed");
    rep.keep(cert::extension_payload(s.space, s.maximal_points(), ev), opt);
    rep.expect(sym_spec_map(identity_perm(k)) == identity_map(s.space.size()), "symbolic spec(id) is not the identity");
  }
  // symbolic U over sums and products, exponents <= 2 and Bottom, k = 2
  std::vector<ExponentIdeal> items{ExponentIdeal::zero_ideal(2)};
  for (std::uint32_t a = 0; a <= 2; ++a)
    for (std::uint32_t b = 0; b <= 2; ++b) items.push_back(ExponentIdeal::of({a, b}));
  for (const auto& i : items)
    for (const auto& j : items) {
      rep.expect(sym_zariski_open(2, sym_sum(i, j)) == (sym_zariski_open(2, i) | sym_zariski_open(2, j)),
                 "symbolic U over a sum");
      rep.expect(sym_zariski_open(2, sym_product(i, j)) == (sym_zariski_open(2, i) & sym_zariski_open(2, j)),
                 "symbolic U over a product");
    }

  rep.note(std::to_string(maps) + " spec maps, " + std::to_string(subsets) + " ideal families");
  rep.note("converse search: " + std::to_string(converse_exp) + " expansive and " + std::to_string(converse_pos) +
           " positive spec maps without an algebraic counterpart");
  finish(rep, watch);
  return rep;
}

SuiteReport run_topology_suite(const SuiteOptions& opt) {
  Stopwatch watch;
  auto rep = make_report(9);
  const auto bounds = suite_bounds();
  std::size_t spaces = 0, homeos = 0, positive = 0, idem_covers = 0, fallback = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& x : enumerate_posets(n)) {
      ++spaces;
      const std::string ctx = "space #" + std::to_string(spaces) + " (" + std::to_string(n) + " points)";
      for (const auto& h : homeomorphisms(x)) {
        ++homeos;
        const auto pos = is_positively_expansive_top(x, h, bounds);
        const auto sp = is_positively_expansive_single_power(x, h, bounds);
        positive += pos.proved();
        rep.expect(pos.status == sp.status, ctx + ": window and single-power forms differ");
        rep.keep(cert::top_payload(x, h, "positive", pos), opt);
        rep.keep(cert::top_payload(x, h, "single_power", sp), opt);
        if (h == identity_map(n)) {
          const auto mc = has_minimal_cover(x, bounds);
          rep.expect(mc.status == pos.status, ctx + ": identity verdict differs from minimal-cover existence");
          rep.keep(cert::top_payload(x, h, "minimal", mc), opt);
        }
      }

      if (n > 5) continue;
      const auto opens = x.opens(bounds);
      const bool all = opens.size() - 1 <= 12;  // nonempty opens
      fallback += !all;
      for (const auto& u : all ? all_covers(x, bounds) : irredundant_covers(x, bounds)) {
        ++idem_covers;
        OpenCover v = u;
        for (std::size_t i = 1; i < u.size(); ++i) v = cover_wedge(v, u);
        rep.expect(cover_wedge(v, v) == v && cover_refines(v, u) && is_cover(x, v),
                   ctx + ": iterated wedge is not an idempotent refinement");
      }
    }
  rep.note(std::to_string(spaces) + " spaces, " + std::to_string(homeos) + " homeomorphisms, " +
           std::to_string(positive) + " positively expansive");
  rep.note(std::to_string(idem_covers) + " covers checked for the idempotent refinement; " + std::to_string(fallback) +
           " spaces with more than 12 nonempty opens used irredundant covers");
  finish(rep, watch);
  return rep;
}

SuiteReport run_chain_suite(const SuiteOptions& opt) {
  Stopwatch watch;
  auto rep = make_report(10, 20.0);
  const auto standard = chain_standard_cover();
  for (std::int64_t m = 1; m <= 8; ++m) {
    const std::size_t n_max = static_cast<std::size_t>(2 * m + 2);
    const auto v = chain_positively_expansive(1, standard, m, n_max);
    const std::string ctx = "cube root positive m=" + std::to_string(m);
    rep.expect(v.proved(), ctx + ": not proved");
    std::size_t worst = 0;
    for (const auto& [w, n] : v.n_table) worst = std::max(worst, n);
    rep.expect(v.n_table.size() == chain_irredundant_covers(-m, m).size() && worst <= n_max,
               ctx + ": n_table incomplete or beyond 2m+2");
    rep.keep(cert::chain_payload("positive", 1, m, n_max, v), opt);
  }

  const auto sweep = chain_positive_sweep(-1, 8, 18);
  rep.expect(sweep.status == Status::Refuted && sweep.exact, "x^3 sweep: not refuted exactly");
  bool fixpoints = !sweep.rejected.empty();
  for (const auto& [c, refuter] : sweep.rejected) {
    const auto v = chain_positively_expansive(-1, c, 8, 18);
    // the windows stop at a cut fixpoint that still misses the refuter
    fixpoints &= v.status == Status::Refuted && v.exact && v.cycle_length == 1 && !v.windows.empty() &&
                 !chain_refines(v.windows.back(), refuter);
  }
  rep.expect(fixpoints, "x^3 sweep: a rejected candidate lacks a stabilized refutation");
  rep.keep(cert::chain_payload("sweep", -1, 8, 18, sweep), opt);

  const auto minimal = chain_minimal_cover(8);
  rep.expect(minimal.status == Status::Refuted, "minimal cover: one was found");
  bool certified = !minimal.rejected.empty();
  for (const auto& [c, w] : minimal.rejected)
    certified &= w == chain_minimal_certificate(c) && chain_is_cover(w) && !chain_refines(c, w);
  rep.expect(certified, "minimal cover: a candidate lacks its c-1 certificate");
  rep.keep(cert::chain_payload("minimal", 0, 8, 0, minimal), opt);

  rep.note(std::to_string(sweep.rejected.size()) + " x^3 candidates refuted, " +
           std::to_string(minimal.rejected.size()) + " minimal-cover candidates refuted");
  finish(rep, watch);
  return rep;
}

}  // namespace ringexp::suites
