#pragma once

#include "ringexp/chain.hpp"
#include "ringexp/generators.hpp"
#include "ringexp/lattice.hpp"
#include "ringexp/symbolic.hpp"
#include "ringexp/topology.hpp"
#include "ringexp/verdict.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ringexp::io {

using nlohmann::json;

/// n_tables longer than this are replaced by a count and a digest.
inline constexpr std::size_t kEmbedLimit = 512;

json ideal_json(const Ideal& i);
Ideal ideal_from_json(const RingPtr& r, const json& j);
json generator_json(const GeneratorSet& g);
GeneratorSet generator_from_json(const RingPtr& r, const json& j);

json sym_ideal_json(const ExponentIdeal& i);
ExponentIdeal sym_ideal_from_json(std::size_t k, const json& j);
json sym_generator_json(const SymGenerator& g);
SymGenerator sym_generator_from_json(std::size_t k, const json& j);

json cover_json(const OpenCover& u);
OpenCover cover_from_json(const json& j);
json chain_cover_json(const ChainCover& u);
ChainCover chain_cover_from_json(const json& j);

json space_json(const FiniteSpace& x);
FiniteSpace space_from_json(const json& j);
json lattice_json(const IdealLattice& lat);

/// FNV-1a over the n_table entries, sorted by the compact dump of each family.
std::uint64_t table_digest(std::vector<std::pair<json, std::size_t>> entries);
/// Same digest over entries whose families are already dumped.
std::uint64_t table_digest_keyed(std::vector<std::pair<std::string, std::size_t>> keyed);
std::uint64_t bytes_digest(const std::vector<std::uint8_t>& bytes);
std::string hex64(std::uint64_t v);

template <class Family, class Enc>
json verdict_json(const Verdict<Family>& v, Enc enc, std::size_t embed_limit = kEmbedLimit) {
  json out;
  out["status"] = to_string(v.status);
  out["positive"] = v.positive;
  out["exact"] = v.exact;
  out["degenerate"] = v.degenerate;
  out["candidate"] = v.candidate ? enc(*v.candidate) : json(nullptr);
  out["witness"] = v.witness ? enc(*v.witness) : json(nullptr);
  out["refuter"] = v.refuter ? enc(*v.refuter) : json(nullptr);
  json wins = json::array();
  for (const auto& w : v.windows) wins.push_back(enc(w));
  out["windows"] = std::move(wins);
  out["cycle_start"] = v.cycle_start;
  out["cycle_length"] = v.cycle_length;
  std::vector<std::pair<json, std::size_t>> entries;
  for (const auto& [f, n] : v.n_table) entries.emplace_back(enc(f), n);
  out["n_table_size"] = entries.size();
  if (entries.size() <= embed_limit) {
    json t = json::array();
    for (const auto& [f, n] : entries) t.push_back(json{{"target", f}, {"n", n}});
    out["n_table"] = std::move(t);
  }
  out["n_table_digest"] = hex64(table_digest(std::move(entries)));
  json rej = json::array();
  for (const auto& [c, r] : v.rejected) rej.push_back(json{{"candidate", enc(c)}, {"refuter", enc(r)}});
  out["rejected"] = std::move(rej);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

inline json verdict_json(const Verdict<GeneratorSet>& v) {
  return verdict_json(v, [](const GeneratorSet& g) { return generator_json(g); });
}
inline json verdict_json(const Verdict<SymGenerator>& v) {
  return verdict_json(v, [](const SymGenerator& g) { return sym_generator_json(g); });
}
inline json verdict_json(const Verdict<OpenCover>& v) {
  return verdict_json(v, [](const OpenCover& u) { return cover_json(u); });
}
inline json verdict_json(const Verdict<ChainCover>& v) {
  return verdict_json(v, [](const ChainCover& u) { return chain_cover_json(u); });
}

/// Status from its string form; throws ValidationError on anything else.
Status status_from_string(const std::string& s);

}  // namespace ringexp::io
