#include "common.hpp"

#include "ringexp/certificate.hpp"
#include "ringexp/expansivity.hpp"
#include "ringexp/generators.hpp"
#include "ringexp/ideal.hpp"
#include "ringexp/lattice.hpp"
#include "ringexp/suites/catalog.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace ringexp::suites {

using detail::finish;
using detail::make_report;
using detail::Stopwatch;

namespace {

const char* mode_name(bool positive) { return positive ? "positive" : "expansive"; }

std::string where(const NamedRing& r, const RingAutomorphism* a = nullptr) {
  std::string s = r.name;
  if (a) {
    s += " alpha=[";
    for (std::size_t i = 0; i < a->image().size(); ++i) s += (i ? "," : "") + std::to_string(a->image()[i]);
    s += "]";
  }
  return s;
}

// Definition replay on index masks: windows are plain products of pulled
// back families, never normalized; refinement is checked on element sets.
class RawReplay {
 public:
  explicit RawReplay(const IdealLattice& lat) : lat_(lat), m_(lat.size()), up_(m_, 0), prod_(m_ * m_) {
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) {
        if (lat[i].subset_of(lat[j])) up_[i] |= std::uint64_t{1} << j;
        prod_[i * m_ + j] = lat.index_of(ideal_product(lat[i], lat[j]));
      }
  }

  std::uint64_t mask(const GeneratorSet& g) const {
    std::uint64_t out = 0;
    for (const auto& i : g.ideals()) out |= std::uint64_t{1} << lat_.index_of(i);
    return out;
  }

  void set_automorphism(const RingAutomorphism& a) {
    pre_.assign(m_, 0);
    img_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      pre_[i] = lat_.index_of(preimage(a, lat_[i]));
      img_[i] = lat_.index_of(image(a, lat_[i]));
    }
  }

  std::uint64_t product(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (a >> i & 1)
        for (std::size_t j = 0; j < m_; ++j)
          if (b >> j & 1) out |= std::uint64_t{1} << prod_[i * m_ + j];
    return out;
  }
  std::uint64_t apply(std::uint64_t a, const std::vector<std::size_t>& perm) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (a >> i & 1) out |= std::uint64_t{1} << perm[i];
    return out;
  }
  bool refines(std::uint64_t a, std::uint64_t b) const {
    for (std::size_t i = 0; i < m_; ++i)
      if ((a >> i & 1) && !(up_[i] & b)) return false;
    return true;
  }

  /// Least n <= n_max with W_n refining each adversary, -1 if none.
  std::vector<int> table(std::uint64_t seed, bool positive, std::size_t n_max,
                         const std::vector<std::uint64_t>& adversaries) const {
    std::vector<int> out(adversaries.size(), -1);
    std::uint64_t w = seed, back = seed, fwd = seed;
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (n > 0) {
        back = apply(back, pre_);
        w = product(w, back);
        if (!positive) {
          fwd = apply(fwd, img_);
          w = product(w, fwd);
        }
      }
      for (std::size_t j = 0; j < adversaries.size(); ++j)
        if (out[j] < 0 && refines(w, adversaries[j])) out[j] = static_cast<int>(n);
    }
    return out;
  }

 private:
  const IdealLattice& lat_;
  std::size_t m_;
  std::vector<std::uint64_t> up_;
  std::vector<std::size_t> prod_;
  std::vector<std::size_t> pre_, img_;
};

}  // namespace

SuiteReport run_generators_suite(const SuiteOptions& opt) {
  Stopwatch watch;
  auto rep = make_report(1, 30.0);
  const auto bounds = suite_bounds();
  for (const auto& nr : catalog_with_cyclic(60)) {
    const auto& r = nr.ring;
    ExpansivityEngine eng(r, bounds);
    auto res = eng.strong_minimal_generator();
    if (!rep.expect(std::holds_alternative<LocalDecomposition>(res), nr.name + ": no strong minimal generator"))
      continue;
    const auto& d = std::get<LocalDecomposition>(res);
    const auto& g = d.strong_minimal_generator;

    const auto gens = enumerate_generators(eng.lattice(), true, bounds);
    const bool minimal = std::all_of(gens.begin(), gens.end(), [&](const GeneratorSet& j) { return refines(g, j); });
    rep.expect(minimal, nr.name + ": not prec-minimal");

    const auto& e = d.idempotents;
    rep.expect(e.size() == g.size() && d.factor_ideals.size() == g.size(), nr.name + ": idempotent count mismatch");
    bool idem = true, principal = true, orth = true;
    Elem total = r->zero();
    for (std::size_t i = 0; i < e.size(); ++i) {
      idem &= r->mul(e[i], e[i]) == e[i];
      const Ideal p = principal_ideal(r, e[i]);
      principal &= g.contains(p) && i < d.factor_ideals.size() && d.factor_ideals[i] == p;
      for (std::size_t j = i + 1; j < e.size(); ++j) orth &= r->mul(e[i], e[j]) == r->zero();
      total = r->add(total, e[i]);
    }
    rep.expect(idem, nr.name + ": member not idempotent");
    rep.expect(principal, nr.name + ": member not the principal ideal of its idempotent");
    rep.expect(orth && total == r->one(), nr.name + ": idempotents not orthogonal or not summing to 1");
    rep.expect(g.size() == maximal_ideals(r, bounds).size(), nr.name + ": factor count differs from #maximal ideals");

    const auto zero = eng.zero_expansive();
    rep.expect(zero.proved(), nr.name + ": 0-expansivity not proved");
    rep.keep(cert::decomposition_payload(r, d), opt);
    rep.keep(cert::finite_payload(r, nullptr, "zero", "search", zero), opt);
  }
  finish(rep, watch);
  return rep;
}

SuiteReport run_decider_oracle_suite(const SuiteOptions& opt) {
  Stopwatch watch;
  auto rep = make_report(2);
  const auto bounds = suite_bounds();
  const auto corpus = small_ring_corpus(16);
  std::map<std::size_t, std::size_t> per_order;
  for (const auto& nr : corpus) ++per_order[nr.ring->order()];
  for (std::size_t n = 2; n <= 16; ++n)
    rep.expect(per_order[n] == known_ring_count(n), "corpus has " + std::to_string(per_order[n]) +
                                                        " rings of order " + std::to_string(n) + ", expected " +
                                                        std::to_string(known_ring_count(n)));
  std::size_t candidates = 0, automorphisms = 0;
  for (const auto& nr : corpus) {
    ExpansivityEngine eng(nr.ring, bounds);
    const auto& lat = eng.lattice();
    RawReplay raw(lat);
    const auto gens = enumerate_generators(lat, true, bounds);
    std::vector<std::uint64_t> adv;
    std::map<std::uint64_t, std::size_t> adv_index;
    for (const auto& g : gens) {
      adv_index.emplace(raw.mask(g), adv.size());
      adv.push_back(raw.mask(g));
    }
    for (const auto& alpha : automorphisms_of(nr.ring)) {
      ++automorphisms;
      raw.set_automorphism(alpha);
      for (bool positive : {false, true}) {
        bool any_proved = false;
        for (std::size_t c = 0; c < gens.size(); ++c) {
          ++candidates;
          const auto v = eng.is_expansivity_generator(alpha, gens[c], positive);
          const std::size_t n_max = 2 * (v.cycle_start + v.cycle_length) + 1;
          const auto table = raw.table(adv[c], positive, n_max, adv);
          const auto miss = std::find(table.begin(), table.end(), -1);
          const bool raw_proved = miss == table.end();
          any_proved |= raw_proved;
          const std::string ctx = where(nr, &alpha) + " " + mode_name(positive) + " candidate #" + std::to_string(c);
          if (!rep.expect(v.proved() == raw_proved, ctx + ": status differs from replay")) continue;
          if (raw_proved) {
            bool same = v.n_table.size() == adv.size();
            for (const auto& [fam, n] : v.n_table) {
              auto it = adv_index.find(raw.mask(fam));
              same &= it != adv_index.end() && table[it->second] == static_cast<int>(n);
            }
            rep.expect(same, ctx + ": n_table differs from replay");
          } else {
            rep.expect(v.refuter && raw.mask(*v.refuter) == adv[static_cast<std::size_t>(miss - table.begin())],
                       ctx + ": refuter is not the first adversary missed by the replay");
          }
        }
        const auto s = positive ? eng.is_positively_expansive(alpha) : eng.is_expansive(alpha);
        rep.expect(s.proved() == any_proved, where(nr, &alpha) + " " + mode_name(positive) + ": search status differs");
        rep.keep(cert::finite_payload(nr.ring, &alpha, mode_name(positive), "search", s), opt);
      }
    }
  }
  rep.note(std::to_string(corpus.size()) + " rings, " + std::to_string(automorphisms) + " automorphisms, " +
           std::to_string(candidates) + " candidate decisions");
  finish(rep, watch);
  return rep;
}

SuiteReport run_propositions_suite(const SuiteOptions& opt) {
  Stopwatch watch;
  auto rep = make_report(3);
  const auto bounds = suite_bounds();
  std::size_t positive_power_changes = 0, positive_proved = 0, total = 0;
  for (const auto& nr : catalog_with_cyclic(60)) {
    ExpansivityEngine eng(nr.ring, bounds);
    for (const auto& alpha : automorphisms_of(nr.ring)) {
      ++total;
      const std::string ctx = where(nr, &alpha);
      const auto e = eng.is_expansive(alpha);
      const auto p = eng.is_positively_expansive(alpha);
      positive_proved += p.proved();
      rep.expect(e.proved(), ctx + ": automorphism not expansive");
      if (p.proved()) rep.expect(e.proved(), ctx + ": positively expansive but not expansive");
      if (alpha.is_identity()) rep.expect(e.status == p.status, ctx + ": identity expansive and positive verdicts differ");
      for (std::int64_t n : {-2, -1, 2, 3}) {
        const auto beta = alpha.power(n);
        rep.expect(eng.is_expansive(beta).status == e.status, ctx + ": verdict changes for power " + std::to_string(n));
        positive_power_changes += eng.is_positively_expansive(beta).status != p.status;
      }
      rep.keep(cert::finite_payload(nr.ring, &alpha, "expansive", "search", e), opt);
      rep.keep(cert::finite_payload(nr.ring, &alpha, "positive", "search", p), opt);
    }
  }
  rep.note(std::to_string(total) + " automorphisms, " + std::to_string(positive_proved) + " positively expansive");
  rep.note("positive verdict changed under a power in " + std::to_string(positive_power_changes) +
           " cases (not asserted)");
  finish(rep, watch);
  return rep;
}

SuiteReport run_doubling_suite(const SuiteOptions& opt) {
  Stopwatch watch;
  auto rep = make_report(4);
  const auto bounds = suite_bounds();
  constexpr std::size_t depth = 6;
  std::size_t witnesses = 0, instances = 0;
  for (const auto& nr : catalog_with_cyclic(60)) {
    const auto& r = nr.ring;
    ExpansivityEngine eng(r, bounds);
    const auto maximals = maximal_ideals(r, bounds).size();
    const auto comp = eng.build_complementary_generator();

    auto bound_instance = [&](const GeneratorSet& j, std::size_t n, const std::string& ctx) {
      ++instances;
      bool holds = false;
      try {
        holds = eng.count_maximals_bound_check(j, comp, n);
      } catch (const Error& ex) {
        rep.expect(false, ctx + ": " + ex.what());
        return;
      }
      rep.expect(holds && maximals <= j.size(), ctx + ": #maximals exceeds |J|");
      rep.keep(cert::count_maximals_payload(j, comp, n, holds), opt);
    };

    if (auto d = eng.strong_minimal_generator(); std::holds_alternative<LocalDecomposition>(d))
      bound_instance(std::get<LocalDecomposition>(d).strong_minimal_generator, 1, nr.name + " minimal generator");

    for (const auto& alpha : automorphisms_of(r)) {
      const auto p = eng.is_positively_expansive(alpha);
      if (!p.proved()) continue;
      ++witnesses;
      const std::string ctx = where(nr, &alpha);
      const auto& i = *p.witness;
      DoublingReport dr;
      try {
        dr = eng.verify_doubling_lemma(alpha, i, depth);
      } catch (const Error& ex) {
        rep.expect(false, ctx + ": doubling lemma: " + ex.what());
        continue;
      }
      rep.expect(dr.holds.size() == depth + 1 &&
                     std::all_of(dr.holds.begin(), dr.holds.end(), [](bool b) { return b; }),
                 ctx + ": doubling lemma report has a failing step");

      // independent replay on generator sets: I_m = I alpha^{-1}(I) ... alpha^{-m}(I)
      std::vector<GeneratorSet> win{i};
      GeneratorSet term = i;
      for (std::size_t m = 1; m <= dr.N + depth; ++m) {
        term = pullback(alpha, term);
        win.push_back(gen_product(win.back(), term));
      }
      rep.expect(refines(pullback(alpha, win[dr.N]), i), ctx + ": alpha^{-1}(I_N) does not refine I");
      rep.expect(dr.N == 0 || !refines(pullback(alpha, win[dr.N - 1]), i), ctx + ": N is not least");
      rep.expect(normalize_antichain(win[dr.N]) == normalize_antichain(dr.J), ctx + ": J differs from I_N");
      GeneratorSet jp = dr.J;  // J^{2^n}
      for (std::size_t n = 0; n <= depth; ++n) {
        GeneratorSet lhs = jp;
        for (std::size_t s = 0; s < n; ++s) lhs = pullback(alpha, lhs);
        rep.expect(refines(lhs, win[dr.N + n]), ctx + ": replayed doubling step " + std::to_string(n) + " fails");
        if (n < depth) jp = normalize_antichain(gen_product(jp, jp));
      }
      rep.keep(cert::doubling_payload(alpha, i, depth, dr), opt);

      // bound instances: (alpha^{-n} J)^{2^n} against the complementary generator
      GeneratorSet jn = dr.J;
      for (std::size_t n = 0; n <= depth; ++n) {
        if (n > 0) jn = pullback(alpha, jn);
        const std::size_t power = std::size_t{1} << n;
        if (refines(gen_power(jn, power), comp)) bound_instance(jn, power, ctx + " n=" + std::to_string(n));
      }
      // the window of the witness that refines the complementary generator
      for (const auto& [fam, n] : p.n_table)
        if (normalize_antichain(fam) == normalize_antichain(comp)) bound_instance(p.windows.at(std::min(n, p.windows.size() - 1)), 1, ctx + " window");
    }
  }
  rep.note(std::to_string(witnesses) + " positive witnesses, " + std::to_string(instances) + " bound instances");
  finish(rep, watch);
  return rep;
}

SuiteReport run_product_quotient_suite(const SuiteOptions& opt) {
  Stopwatch watch;
  auto rep = make_report(5);
  const auto bounds = suite_bounds();

  const std::vector<NamedRing> factors = {
      {"Z/2", make_cyclic(2)},           {"Z/3", make_cyclic(3)},
      {"Z/4", make_cyclic(4)},           {"Z/5", make_cyclic(5)},
      {"Z/6", make_cyclic(6)},           {"Z/8", make_cyclic(8)},
      {"Z/9", make_cyclic(9)},           {"F4", make_poly_quotient(2, {1, 1, 1})},
      {"F2[x]/(x^2)", make_poly_quotient(2, {0, 0, 1})}, {"F9", make_poly_quotient(3, {1, 0, 1})},
      {"F2[x]/(x^2+x)", make_poly_quotient(2, {0, 1, 1})},
  };
  struct FactorData {
    std::unique_ptr<ExpansivityEngine> eng;
    std::vector<RingAutomorphism> auts;
    std::vector<Status> exp, pos;
  };
  std::vector<FactorData> fd;
  for (const auto& f : factors) {
    FactorData d;
    d.eng = std::make_unique<ExpansivityEngine>(f.ring, bounds);
    d.auts = automorphisms_of(f.ring);
    for (const auto& a : d.auts) {
      d.exp.push_back(d.eng->is_expansive(a).status);
      d.pos.push_back(d.eng->is_positively_expansive(a).status);
    }
    fd.push_back(std::move(d));
  }
  std::size_t pairs = 0, product_cases = 0, positive_agree = 0, positive_disagree = 0;
  for (std::size_t x = 0; x < factors.size(); ++x)
    for (std::size_t y = x; y < factors.size(); ++y) {
      ++pairs;
      const auto prod = make_product({factors[x].ring, factors[y].ring}, bounds);
      const NamedRing named{factors[x].name + " x " + factors[y].name, prod};
      ExpansivityEngine eng(prod, bounds);
      for (std::size_t a = 0; a < fd[x].auts.size(); ++a)
        for (std::size_t b = 0; b < fd[y].auts.size(); ++b) {
          ++product_cases;
          const std::vector<RingAutomorphism> parts{fd[x].auts[a], fd[y].auts[b]};
          const auto alpha = product_automorphism(prod, parts);
          const auto e = eng.is_expansive(alpha);
          const bool both = fd[x].exp[a] == Status::Proved && fd[y].exp[b] == Status::Proved;
          rep.expect(e.proved() == both, where(named, &alpha) + ": product expansivity differs from the factors");
          const auto p = eng.is_positively_expansive(alpha);
          const bool both_pos = fd[x].pos[a] == Status::Proved && fd[y].pos[b] == Status::Proved;
          (p.proved() == both_pos ? positive_agree : positive_disagree)++;
          rep.keep(cert::finite_payload(prod, &alpha, "expansive", "search", e), opt);
        }
    }
  rep.expect(pairs >= 50, "fewer than 50 factor pairs");
  rep.note(std::to_string(pairs) + " factor pairs, " + std::to_string(product_cases) + " product automorphisms");
  rep.note("positive analogue (not asserted): " + std::to_string(positive_agree) + " agree, " +
           std::to_string(positive_disagree) + " differ");

  std::size_t quotients = 0;
  for (const auto& nr : catalog_with_cyclic(30)) {
    const auto& r = nr.ring;
    ExpansivityEngine eng(r, bounds);
    const auto& lat = eng.lattice();
    const auto auts = automorphisms_of(r);
    std::vector<FiniteVerdict> ev, pv;
    for (const auto& a : auts) {
      ev.push_back(eng.is_expansive(a));
      pv.push_back(eng.is_positively_expansive(a));
    }
    for (std::size_t j = 0; j < lat.whole_index(); ++j) {
      const Ideal& J = lat[j];
      std::unique_ptr<Quotient> q;
      std::unique_ptr<ExpansivityEngine> qeng;
      for (std::size_t a = 0; a < auts.size(); ++a) {
        if (!(image(auts[a], J) == J)) continue;
        if (!q) {
          q = std::make_unique<Quotient>(make_quotient(J));
          qeng = std::make_unique<ExpansivityEngine>(q->ring, bounds);
        }
        ++quotients;
        const auto beta = induced_automorphism(auts[a], *q);
        const std::string ctx = where(nr, &auts[a]) + " mod ideal #" + std::to_string(j);
        auto project = [&](const GeneratorSet& g) {
          std::vector<Ideal> out;
          for (const auto& i : g.ideals()) {
            ElementSet s(q->ring->order());
            i.members().for_each([&](Elem x) { s.insert(q->projection[x]); });
            out.push_back(Ideal::validated(q->ring, std::move(s)));
          }
          return GeneratorSet::make(q->ring, std::move(out));
        };
        for (bool positive : {false, true}) {
          const auto& v = positive ? pv[a] : ev[a];
          if (!v.proved()) continue;
          const auto qv = positive ? qeng->is_positively_expansive(beta) : qeng->is_expansive(beta);
          rep.expect(qv.proved(), ctx + ": " + mode_name(positive) + " not inherited by the quotient");
          const auto image_gen = project(*v.witness);
          rep.expect(qeng->is_expansivity_generator(beta, image_gen, positive).proved(),
                     ctx + ": projected witness is not a generator of expansivity");
          rep.keep(cert::finite_payload(q->ring, &beta, mode_name(positive), "search", qv), opt);
        }
      }
    }
  }
  rep.note(std::to_string(quotients) + " invariant (ring, automorphism, ideal) triples");
  finish(rep, watch);
  return rep;
}

}  // namespace ringexp::suites
