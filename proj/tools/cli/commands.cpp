#include "commands.hpp"

#include "ringexp/certificate.hpp"
#include "ringexp/chain.hpp"
#include "ringexp/errors.hpp"
#include "ringexp/expansivity.hpp"
#include "ringexp/ideal.hpp"
#include "ringexp/io/dot.hpp"
#include "ringexp/io/json.hpp"
#include "ringexp/io/ring_file.hpp"
#include "ringexp/suites/suites.hpp"
#include "ringexp/symbolic.hpp"
#include "ringexp/topology.hpp"
#include "ringexp/zariski.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace ringexp::cli {

using nlohmann::json;

namespace {

json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(what + ": " + e.what());
  }
}

// automorphism and permutation flags take a bare word or JSON
json word_or_json(const std::string& s) {
  if (!s.empty() && (s.front() == '[' || s.front() == '{' || s.front() == '"')) return parse_text(s, "argument");
  return json(s);
}

std::string ideal_label(const IdealLattice& lat, std::size_t i) {
  const auto& r = *lat.ring();
  std::string s = "(";
  const auto& g = lat.generators_of(i);
  for (std::size_t k = 0; k < g.size(); ++k) s += (k ? "," : "") + io::elem_to_json(r, g[k]).dump();
  if (g.empty()) s += "0";
  return s + ")";
}

std::string generator_label(const IdealLattice& lat, const GeneratorSet& g) {
  std::string s = "{";
  for (std::size_t k = 0; k < g.size(); ++k) s += (k ? "," : "") + ideal_label(lat, lat.index_of(g.ideals()[k]));
  return s + "}";
}

void attach_check(Outcome& out, const json& payload, const JobSpec& job) {
  out.doc["certificate"] = payload;
  if (!job.check_certificate) return;
  const auto res = check_certificate(payload, job.bounds);
  out.doc["certificate_check"] = {{"ok", res.ok}, {"reason", res.reason}};
  if (!res.ok) out.code = kRefuted;
}

template <class V, class Label>
std::string verdict_text(const V& v, Label label) {
  std::ostringstream os;
  os << "status: " << to_string(v.status) << (v.exact ? "" : " (tested bound)") << "\n";
  if (v.witness) os << "witness: " << label(*v.witness) << "\n";
  if (v.refuter) os << "refuter: " << label(*v.refuter) << "\n";
  if (!v.windows.empty()) os << "windows: " << v.windows.size() << ", cycle " << v.cycle_start << "+" << v.cycle_length << "\n";
  os << "rejected candidates: " << v.rejected.size() << "\n";
  if (!v.note.empty()) os << "note: " << v.note << "\n";
  return os.str();
}

Outcome finish_text(Outcome out, const JobSpec& job, const std::string& text) {
  if (job.format == "text") {
    out.text = text;
    if (out.doc.contains("certificate_check"))
      out.text += std::string("certificate check: ") + (out.doc["certificate_check"]["ok"].get<bool>() ? "ok" : "FAILED") + "\n";
  }
  return out;
}

}  // namespace

json load_document(const JobSpec& job) {
  if (job.input.empty()) {
    if (job.inline_json.empty()) throw ValidationError("no input: pass --input FILE or an inline definition");
    return parse_text(job.inline_json, "inline definition");
  }
  std::string text;
  if (job.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(job.input);
    if (!in) throw ValidationError("cannot read " + job.input);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_text(text, job.input);
}

Outcome cmd_analyze(const JobSpec& job) {
  const json doc = load_document(job);
  Outcome out;
  if (auto k = io::semilocal_rank(doc)) {
    const auto none = sym_minimal_generator_exists(*k);
    json primes = json::array();
    for (const auto& p : sym_primes(*k)) primes.push_back(io::sym_ideal_json(p));
    out.doc = {{"ring", "semilocal"},
               {"k", *k},
               {"primes", primes},
               {"maximal_count", *k},
               {"complementary_generator", io::sym_generator_json(sym_complementary(*k))},
               {"minimal_generator", io::verdict_json(none)}};
    return finish_text(out, job,
                       "semilocal ring with " + std::to_string(*k) + " primes\nminimal generator: " +
                           to_string(none.status) + "\n");
  }
  const RingPtr r = io::ring_from_json(doc, job.bounds);
  ExpansivityEngine eng(r, job.bounds);
  const auto& lat = eng.lattice();
  json maximal = json::array(), primes = json::array();
  for (auto i : lat.maximal()) maximal.push_back(ideal_label(lat, i));
  for (auto i : lat.primes()) primes.push_back(ideal_label(lat, i));
  out.doc = {{"ring", r->recipe().describe()},
             {"order", r->order()},
             {"characteristic", r->characteristic()},
             {"ideals", lat.size()},
             {"maximal", maximal},
             {"primes", primes},
             {"local", lat.is_local()},
             {"degenerate", r->is_trivial()}};
  std::ostringstream text;
  text << r->recipe().describe() << ": order " << r->order() << ", " << lat.size() << " ideals, "
       << lat.maximal().size() << " maximal" << (r->is_trivial() ? " (degenerate)" : "") << "\n";

  const auto d = eng.strong_minimal_generator();
  if (const auto* ld = std::get_if<LocalDecomposition>(&d)) {
    json idem = json::array(), orders = json::array();
    for (auto e : ld->idempotents) idem.push_back(io::elem_to_json(*r, e));
    for (const auto& f : ld->factors) orders.push_back(f->order());
    out.doc["decomposition"] = {{"idempotents", idem}, {"factor_orders", orders}};
    out.doc["strong_minimal_generator"] = generator_label(lat, ld->strong_minimal_generator);
    text << "decomposition: " << idem.dump() << "\nstrong minimal generator: "
         << generator_label(lat, ld->strong_minimal_generator) << "\n";
  }
  try {
    const auto auts = enumerate_automorphisms(r, job.bounds);
    std::map<std::uint64_t, std::size_t> by_order;
    std::size_t positive = 0;
    for (const auto& a : auts) {
      ++by_order[a.order()];
      positive += eng.is_positively_expansive(a).proved();
    }
    json hist = json::object();
    for (const auto& [o, c] : by_order) hist[std::to_string(o)] = c;
    out.doc["automorphisms"] = {{"count", auts.size()}, {"by_order", hist}, {"positively_expansive", positive}};
    text << "automorphisms: " << auts.size() << " (" << positive << " positively expansive)\n";
  } catch (const CapacityError& e) {
    out.doc["automorphisms"] = nullptr;
    out.doc["automorphisms_note"] = e.what();
    text << "automorphisms: skipped (" << e.what() << ")\n";
  }
  return finish_text(out, job, text.str());
}

Outcome cmd_expansivity(const JobSpec& job, const std::string& mode, const std::string& automorphism,
                        const std::string& candidate, std::size_t n_max, std::uint32_t adversary_bound) {
  if (mode != "expansive" && mode != "positive" && mode != "zero") throw ValidationError("unknown mode " + mode);
  const json doc = load_document(job);
  const bool positive = mode == "positive";
  Outcome out;
  if (auto k = io::semilocal_rank(doc)) {
    auto label = [](const SymGenerator& g) { return g.str(); };
    if (mode == "zero") {
      const auto v = sym_minimal_generator_exists(*k);
      out.doc = {{"verdict", io::verdict_json(v)}};
      const SymGenerator cand = v.candidate ? *v.candidate : sym_complementary(*k);
      attach_check(out, cert::sym_minimal_payload(*k, cand, v.refuter ? *v.refuter : *v.witness), job);
      out.code = std::max(out.code, exit_for(v.status));
      return finish_text(out, job, verdict_text(v, label));
    }
    const CoordPerm perm = io::sym_perm_from_json(*k, word_or_json(automorphism));
    SymOracleOptions opt;
    opt.positive = positive;
    opt.n_max = n_max;
    opt.adversary_bound = adversary_bound;
    const SymGenerator cand =
        candidate.empty() ? sym_complementary(*k) : io::sym_generator_from_json(*k, parse_text(candidate, "candidate"));
    SymVerdict v;
    if (candidate.empty()) {
      v = sym_expansivity(*k, perm, positive, opt, job.bounds);
    } else if (perm == identity_perm(*k)) {
      v.positive = positive;
      v.candidate = cand;
      v.status = sym_identity_expansivity_criterion(cand) ? Status::Proved : Status::Refuted;
      if (v.proved()) v.witness = cand;
    }
    const auto res = SymOracle(job.bounds).run(cand, perm, opt);
    if (!v.candidate) v = res.verdict;
    out.doc = {{"verdict", io::verdict_json(v)}};
    attach_check(out, cert::sym_oracle_payload(cand, opt, res), job);
    out.code = std::max(out.code, exit_for(v.status));
    return finish_text(out, job, verdict_text(v, label));
  }

  const RingPtr r = io::ring_from_json(doc, job.bounds);
  ExpansivityEngine eng(r, job.bounds);
  const auto& lat = eng.lattice();
  auto label = [&](const GeneratorSet& g) { return generator_label(lat, g); };
  if (mode == "zero") {
    const auto v = eng.zero_expansive();
    out.doc = {{"verdict", io::verdict_json(v)}};
    attach_check(out, cert::finite_payload(r, nullptr, "zero", "search", v), job);
    out.code = std::max(out.code, exit_for(v.status));
    return finish_text(out, job, verdict_text(v, label));
  }
  const auto alpha = io::automorphism_from_json(r, word_or_json(automorphism.empty() ? "identity" : automorphism));
  FiniteVerdict v;
  std::string scope = "search";
  if (!candidate.empty()) {
    std::vector<Ideal> ideals;
    for (const auto& gens : parse_text(candidate, "candidate")) {
      std::vector<Elem> elems;
      for (const auto& e : gens) elems.push_back(io::elem_from_json(*r, e));
      ideals.push_back(ideal_generated(r, elems));
    }
    v = eng.is_expansivity_generator(alpha, GeneratorSet::make(r, std::move(ideals)), positive);
    scope = "candidate";
  } else {
    v = positive ? eng.is_positively_expansive(alpha) : eng.is_expansive(alpha);
  }
  out.doc = {{"verdict", io::verdict_json(v)}};
  if (v.witness) out.doc["witness_label"] = label(*v.witness);
  attach_check(out, cert::finite_payload(r, &alpha, mode, scope, v), job);
  out.code = std::max(out.code, exit_for(v.status));
  return finish_text(out, job, verdict_text(v, label));
}

Outcome cmd_spec(const JobSpec& job, const std::string& exporter) {
  const json doc = load_document(job);
  Outcome out;
  Spectrum s;
  json primes = json::array();
  std::unique_ptr<IdealLattice> lat;
  if (auto k = io::semilocal_rank(doc)) {
    s = sym_spectrum(*k);
    for (const auto& p : sym_primes(*k)) primes.push_back(io::sym_ideal_json(p));
  } else {
    lat = std::make_unique<IdealLattice>(io::ring_from_json(doc, job.bounds), job.bounds);
    s = spectrum(*lat);
    for (auto i : s.prime_index) primes.push_back(ideal_label(*lat, i));
  }
  if (exporter == "dot") {
    out.text = io::space_dot(s.space, "spec");
  } else if (exporter == "lattice-dot") {
    if (!lat) throw ValidationError("lattice export needs a finite ring");
    out.text = io::lattice_dot(*lat);
  } else if (exporter == "json") {
    out.doc = {{"space", io::space_json(s.space)}, {"primes", primes}, {"closed_points", io::cover_json({s.maximal_points()})[0]}};
    if (lat) out.doc["lattice"] = io::lattice_json(*lat);
  } else {
    throw ValidationError("unknown export " + exporter);
  }
  return out;
}

Outcome cmd_space(const JobSpec& job, const std::string& mode) {
  const json doc = load_document(job);
  const FiniteSpace x = io::space_from_json(doc);
  SpaceMap h = identity_map(x.size());
  if (doc.contains("map")) h.f = doc.at("map").get<std::vector<std::size_t>>();
  Outcome out;
  auto label = [](const OpenCover& u) { return io::cover_json(u).dump(); };
  if (mode == "extension") {
    PointMask y = 0;
    for (auto p : doc.at("subspace").get<std::vector<std::size_t>>()) y |= PointMask{1} << p;
    const auto v = is_extension_closed(x, y, job.bounds);
    out.doc = {{"status", to_string(v.status)}};
    attach_check(out, cert::extension_payload(x, y, v), job);
    out.code = std::max(out.code, exit_for(v.status));
    return finish_text(out, job, std::string("status: ") + to_string(v.status) + "\n");
  }
  TopVerdict v;
  if (mode == "expansive") v = is_refinement_expansive(x, h, job.bounds);
  else if (mode == "positive") v = is_positively_expansive_top(x, h, job.bounds);
  else if (mode == "single_power") v = is_positively_expansive_single_power(x, h, job.bounds);
  else if (mode == "minimal") v = has_minimal_cover(x, job.bounds);
  else throw ValidationError("unknown mode " + mode);
  out.doc = {{"verdict", io::verdict_json(v)}};
  attach_check(out, cert::top_payload(x, h, mode, v), job);
  out.code = std::max(out.code, exit_for(v.status));
  return finish_text(out, job, verdict_text(v, label));
}

Outcome cmd_chain(const JobSpec& job, const std::string& check, std::int64_t shift, std::int64_t m, std::size_t n_max) {
  if (shift != 1 && shift != -1) throw ValidationError("shift must be +1 or -1");
  if (m < 1 || m > 64) throw ValidationError("window m must be in [1, 64]");
  if (n_max == 0) n_max = static_cast<std::size_t>(2 * m + 2);
  ChainVerdict v;
  if (check == "positive") v = chain_positively_expansive(shift, chain_standard_cover(), m, n_max);
  else if (check == "sweep") v = chain_positive_sweep(shift, m, n_max);
  else if (check == "minimal") v = chain_minimal_cover(m);
  else throw ValidationError("unknown chain check " + check);
  Outcome out;
  out.doc = {{"verdict", io::verdict_json(v)}};
  attach_check(out, cert::chain_payload(check, check == "minimal" ? 0 : shift, m, check == "minimal" ? 0 : n_max, v), job);
  out.code = std::max(out.code, exit_for(v.status));
  return finish_text(out, job, verdict_text(v, [](const ChainCover& u) { return chain_str(u); }));
}

Outcome cmd_verify(const JobSpec& job, const std::string& suite) {
  suites::SuiteOptions opt;
  opt.seed = job.seed;
  std::vector<suites::SuiteReport> reports;
  if (suite == "all") {
    reports = suites::run_all(opt);
  } else {
    const int id = suites::suite_id(suite);
    if (id == 0) throw ValidationError("unknown suite " + suite);
    opt.keep_payloads = job.check_certificate;
    reports.push_back(suites::run_suite(id, opt));
    if (job.check_certificate && id != 11) reports.push_back(suites::run_audit({&reports.front()}));
  }
  Outcome out;
  out.doc = json::array();
  std::ostringstream text;
  for (const auto& r : reports) {
    out.doc.push_back(r.summary());
    text << (r.pass() ? "PASS" : "FAIL") << "  " << r.id << " " << r.name << "  checks=" << r.checks
         << " failed=" << r.failed << "  " << r.seconds << " s\n";
    for (const auto& f : r.failures) text << "    " << f << "\n";
    for (const auto& n : r.notes) text << "    note: " << n << "\n";
    if (!r.pass()) out.code = kRefuted;
  }
  return finish_text(out, job, text.str());
}

Outcome cmd_check(const JobSpec& job) {
  const json doc = load_document(job);
  const json payload = doc.contains("certificate") ? doc.at("certificate") : doc;
  const auto res = check_certificate(payload, job.bounds);
  Outcome out;
  out.doc = {{"ok", res.ok}, {"reason", res.reason}};
  out.code = res.ok ? kOk : kRefuted;
  return finish_text(out, job, res.ok ? "certificate ok\n" : "certificate rejected: " + res.reason + "\n");
}

}  // namespace ringexp::cli
