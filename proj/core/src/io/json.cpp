#include "ringexp/io/json.hpp"

#include "ringexp/errors.hpp"

#include <algorithm>
#include <cstdio>

namespace ringexp::io {

namespace {

std::int64_t cut_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return kInf;
  if (!j.is_number_integer()) throw ValidationError("chain cut must be an integer or \"inf\"");
  return j.get<std::int64_t>();
}

json cut_json(std::int64_t c) { return c == kInf ? json("inf") : json(c); }

}  // namespace

json ideal_json(const Ideal& i) { return json(i.elements()); }

Ideal ideal_from_json(const RingPtr& r, const json& j) {
  if (!j.is_array()) throw ValidationError("ideal must be an array of element indices");
  ElementSet s(r->order());
  for (const auto& e : j) {
    const auto v = e.get<std::int64_t>();
    if (v < 0 || static_cast<std::size_t>(v) >= r->order()) throw ValidationError("ideal element out of range");
    s.insert(static_cast<Elem>(v));
  }
  return Ideal::validated(r, std::move(s));
}

json generator_json(const GeneratorSet& g) {
  json out = json::array();
  for (const auto& i : g.ideals()) out.push_back(ideal_json(i));
  return out;
}

GeneratorSet generator_from_json(const RingPtr& r, const json& j) {
  if (!j.is_array()) throw ValidationError("generator must be an array of ideals");
  std::vector<Ideal> ideals;
  for (const auto& i : j) ideals.push_back(ideal_from_json(r, i));
  return GeneratorSet::make(r, std::move(ideals));
}

json sym_ideal_json(const ExponentIdeal& i) {
  if (i.bottom) return json{{"bottom", true}};
  return json{{"exponents", i.e}};
}

ExponentIdeal sym_ideal_from_json(std::size_t k, const json& j) {
  // a bare array is shorthand for {"exponents": [...]}
  if (!j.is_object() && !j.is_array()) throw ValidationError("symbolic ideal must be an object or an exponent list");
  if (j.is_object() && j.value("bottom", false)) return ExponentIdeal::zero_ideal(k);
  if (j.is_object() && !j.contains("exponents"))
    throw ValidationError("symbolic ideal needs \"exponents\" or \"bottom\"");
  const auto& ej = j.is_array() ? j : j.at("exponents");
  if (!ej.is_array()) throw ValidationError("exponents must be a list");
  auto e = ej.get<std::vector<std::int64_t>>();
  if (e.size() != k) throw ValidationError("symbolic ideal has the wrong number of exponents");
  std::vector<std::uint32_t> out;
  for (auto x : e) {
    if (x < 0) throw ValidationError("negative exponent");
    out.push_back(static_cast<std::uint32_t>(x));
  }
  return ExponentIdeal::of(std::move(out));
}

json sym_generator_json(const SymGenerator& g) {
  json out = json::array();
  for (const auto& m : g.members()) out.push_back(sym_ideal_json(m));
  return out;
}

SymGenerator sym_generator_from_json(std::size_t k, const json& j) {
  if (!j.is_array()) throw ValidationError("symbolic generator must be an array");
  std::vector<ExponentIdeal> members;
  for (const auto& m : j) members.push_back(sym_ideal_from_json(k, m));
  return SymGenerator(k, std::move(members));
}

json cover_json(const OpenCover& u) {
  json out = json::array();
  for (PointMask m : u) {
    json pts = json::array();
    for (std::size_t p = 0; p < 64; ++p)
      if (m >> p & 1) pts.push_back(p);
    out.push_back(std::move(pts));
  }
  return out;
}

OpenCover cover_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("cover must be an array of point arrays");
  std::vector<PointMask> members;
  for (const auto& m : j) {
    PointMask mask = 0;
    for (const auto& p : m) {
      const auto v = p.get<std::int64_t>();
      if (v < 0 || v >= 64) throw ValidationError("point index out of range");
      mask |= PointMask{1} << v;
    }
    members.push_back(mask);
  }
  return make_cover(std::move(members));
}

json chain_cover_json(const ChainCover& u) {
  json out = json::array();
  for (const auto& o : u) out.push_back(json::array({cut_json(o.neg), cut_json(o.pos)}));
  return out;
}

ChainCover chain_cover_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("chain cover must be an array of cut pairs");
  std::vector<ChainOpen> members;
  for (const auto& m : j) {
    if (!m.is_array() || m.size() != 2) throw ValidationError("chain open must be a pair of cuts");
    members.push_back({cut_from_json(m[0]), cut_from_json(m[1])});
  }
  return chain_make_cover(std::move(members));
}

json space_json(const FiniteSpace& x) {
  json order = json::array();
  for (const auto& [p, q] : x.order_pairs(false)) order.push_back(json::array({p, q}));
  return json{{"points", x.labels()}, {"order", std::move(order)}};
}

FiniteSpace space_from_json(const json& j) {
  std::vector<std::string> labels;
  std::size_t n = 0;
  if (j.at("points").is_number_integer()) {
    n = j.at("points").get<std::size_t>();
  } else {
    labels = j.at("points").get<std::vector<std::string>>();
    n = labels.size();
  }
  if (n > 64) throw CapacityError("space: more than 64 points");
  // reflexive-transitive closure of the listed pairs
  std::vector<PointMask> down(n);
  for (std::size_t p = 0; p < n; ++p) down[p] = PointMask{1} << p;
  for (const auto& pr : j.value("order", json::array())) {
    const auto p = pr.at(0).get<std::size_t>(), q = pr.at(1).get<std::size_t>();
    if (p >= n || q >= n) throw ValidationError("space: order pair out of range");
    down[q] |= PointMask{1} << p;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < n; ++q) {
      PointMask d = down[q];
      for (std::size_t p = 0; p < n; ++p)
        if (down[q] >> p & 1) d |= down[p];
      if (d != down[q]) {
        down[q] = d;
        changed = true;
      }
    }
  }
  return FiniteSpace::from_order(
      n, [&](std::size_t p, std::size_t q) { return down[q] >> p & 1; }, std::move(labels));
}

json lattice_json(const IdealLattice& lat) {
  json ideals = json::array();
  for (const auto& i : lat.ideals()) ideals.push_back(ideal_json(i));
  json hasse = json::array();
  for (std::size_t i = 0; i < lat.size(); ++i)
    for (std::size_t j = i + 1; j < lat.size(); ++j) {
      if (!lat.leq(i, j)) continue;
      bool cover = true;
      for (std::size_t m = i + 1; m < j && cover; ++m) cover = !(lat.leq(i, m) && lat.leq(m, j));
      if (cover) hasse.push_back(json::array({i, j}));
    }
  return json{{"ideals", std::move(ideals)},
              {"hasse", std::move(hasse)},
              {"maximal", lat.maximal()},
              {"primes", lat.primes()}};
}

std::uint64_t table_digest(std::vector<std::pair<json, std::size_t>> entries) {
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(entries.size());
  for (auto& [f, n] : entries) keyed.emplace_back(f.dump(), n);
  return table_digest_keyed(std::move(keyed));
}

std::uint64_t table_digest_keyed(std::vector<std::pair<std::string, std::size_t>> keyed) {
  std::sort(keyed.begin(), keyed.end());
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& [s, n] : keyed) {
    feed(s);
    feed(":" + std::to_string(n) + ";");
  }
  return h;
}

std::uint64_t bytes_digest(const std::vector<std::uint8_t>& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (auto c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Status status_from_string(const std::string& s) {
  if (s == "Proved") return Status::Proved;
  if (s == "Refuted") return Status::Refuted;
  if (s == "UnknownAtBound") return Status::UnknownAtBound;
  throw ValidationError("unknown status: " + s);
}

}  // namespace ringexp::io
