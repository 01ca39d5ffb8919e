#include "ringexp/io/ring_file.hpp"

#include "ringexp/errors.hpp"
#include "ringexp/ideal.hpp"

#include <numeric>

namespace ringexp::io {

namespace {

std::uint32_t get_u32(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) throw ValidationError(std::string("missing integer \"") + key + "\"");
  const auto v = j.at(key).get<std::int64_t>();
  if (v <= 0 || v > 0xffffffffLL) throw ValidationError(std::string("\"") + key + "\" must be positive");
  return static_cast<std::uint32_t>(v);
}

std::pair<std::size_t, std::size_t> parse_swap(const std::string& s) {
  const auto comma = s.find(',');
  if (s.rfind("swap:", 0) != 0 || comma == std::string::npos) throw ValidationError("malformed swap: " + s);
  try {
    return {std::stoul(s.substr(5, comma - 5)), std::stoul(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ValidationError("malformed swap: " + s);
  }
}

}  // namespace

std::optional<std::size_t> semilocal_rank(const json& j) {
  if (!j.is_object() || j.value("kind", "") != "semilocal") return std::nullopt;
  const auto k = get_u32(j, "k");
  if (k > 16) throw CapacityError("semilocal rank above 16");
  return k;
}

RingPtr ring_from_json(const json& j, const Bounds& bounds) {
  if (!j.is_object() || !j.contains("kind")) throw ValidationError("ring definition needs a \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "cyclic") return make_cyclic(get_u32(j, "n"), bounds);
  if (kind == "poly_quotient") {
    const auto p = get_u32(j, "p");
    return make_poly_quotient(p, j.at("coeffs").get<std::vector<std::uint32_t>>(), bounds);
  }
  if (kind == "product") {
    std::vector<RingPtr> parts;
    for (const auto& f : j.at("factors")) parts.push_back(ring_from_json(f, bounds));
    if (parts.empty()) throw ValidationError("product needs at least one factor");
    return make_product(parts, bounds);
  }
  if (kind == "quotient") {
    const RingPtr base = ring_from_json(j.at("base"), bounds);
    std::vector<Elem> gens;
    for (const auto& g : j.at("ideal_generators")) gens.push_back(elem_from_json(*base, g));
    return make_quotient(ideal_generated(base, gens)).ring;
  }
  if (kind == "tables") {
    FiniteRing::Tables t;
    t.order = get_u32(j, "order");
    if (t.order > bounds.max_order) throw CapacityError("ring order exceeds bound");
    for (const auto& row : j.at("add"))
      for (const auto& v : row) t.add.push_back(v.get<Elem>());
    for (const auto& row : j.at("mul"))
      for (const auto& v : row) t.mul.push_back(v.get<Elem>());
    t.zero = j.at("zero").get<Elem>();
    t.one = j.at("one").get<Elem>();
    for (auto v : t.add)
      if (v >= t.order) throw ValidationError("table entry out of range");
    for (auto v : t.mul)
      if (v >= t.order) throw ValidationError("table entry out of range");
    return FiniteRing::from_tables(std::move(t));
  }
  if (kind == "semilocal") throw DomainError("semilocal rings are symbolic; no finite tables");
  throw ValidationError("unknown ring kind: " + kind);
}

json ring_to_json(const FiniteRing& r) {
  const Recipe& rc = r.recipe();
  switch (rc.kind) {
    case Recipe::Kind::cyclic:
      return json{{"kind", "cyclic"}, {"n", rc.modulus}};
    case Recipe::Kind::poly_quotient:
      return json{{"kind", "poly_quotient"}, {"p", rc.modulus}, {"coeffs", rc.coeffs}};
    case Recipe::Kind::product: {
      json f = json::array();
      for (const auto& part : r.factors()) f.push_back(ring_to_json(*part));
      return json{{"kind", "product"}, {"factors", std::move(f)}};
    }
    case Recipe::Kind::quotient: {
      const FiniteRing& base = *r.quotient_base();
      json g = json::array();
      for (Elem e : rc.ideal_generators) g.push_back(elem_to_json(base, e));
      return json{{"kind", "quotient"}, {"base", ring_to_json(base)}, {"ideal_generators", std::move(g)}};
    }
    case Recipe::Kind::explicit_tables:
      break;
  }
  const std::size_t n = r.order();
  json add = json::array(), mul = json::array();
  for (Elem a = 0; a < n; ++a) {
    json ra = json::array(), rm = json::array();
    for (Elem b = 0; b < n; ++b) {
      ra.push_back(r.add(a, b));
      rm.push_back(r.mul(a, b));
    }
    add.push_back(std::move(ra));
    mul.push_back(std::move(rm));
  }
  return json{{"kind", "tables"}, {"order", n}, {"add", add}, {"mul", mul}, {"zero", r.zero()}, {"one", r.one()}};
}

Elem elem_from_json(const FiniteRing& r, const json& j) {
  const Recipe& rc = r.recipe();
  switch (rc.kind) {
    case Recipe::Kind::cyclic: {
      const auto v = j.get<std::int64_t>();
      const auto n = static_cast<std::int64_t>(rc.modulus);
      return static_cast<Elem>(((v % n) + n) % n);
    }
    case Recipe::Kind::poly_quotient: {
      const std::size_t d = rc.coeffs.size() - 1;
      if (!j.is_array() || j.size() > d) throw ValidationError("polynomial element has too many coefficients");
      Elem idx = 0, place = 1;
      const auto p = static_cast<std::int64_t>(rc.modulus);
      for (std::size_t i = 0; i < j.size(); ++i) {
        const auto c = ((j[i].get<std::int64_t>() % p) + p) % p;
        idx += static_cast<Elem>(c) * place;
        place *= rc.modulus;
      }
      return idx;
    }
    case Recipe::Kind::product: {
      if (!j.is_array() || j.size() != r.factors().size()) throw ValidationError("product element has the wrong arity");
      std::vector<Elem> coords;
      for (std::size_t i = 0; i < j.size(); ++i) coords.push_back(elem_from_json(*r.factors()[i], j[i]));
      return r.join(coords);
    }
    case Recipe::Kind::quotient: {
      const RingPtr& base = r.quotient_base();
      const Elem b = elem_from_json(*base, j);
      const Ideal kernel = ideal_generated(base, rc.ideal_generators);
      for (Elem q = 0; q < r.order(); ++q)
        if (kernel.contains(base->sub(b, r.representative(q)))) return q;
      throw InvariantViolation("quotient element has no coset");
    }
    case Recipe::Kind::explicit_tables:
      break;
  }
  const auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::size_t>(v) >= r.order()) throw ValidationError("element index out of range");
  return static_cast<Elem>(v);
}

json elem_to_json(const FiniteRing& r, Elem a) {
  const Recipe& rc = r.recipe();
  switch (rc.kind) {
    case Recipe::Kind::poly_quotient: {
      json out = json::array();
      Elem v = a;
      for (std::size_t i = 0; i + 1 < rc.coeffs.size(); ++i) {
        out.push_back(v % rc.modulus);
        v /= rc.modulus;
      }
      return out;
    }
    case Recipe::Kind::product: {
      json out = json::array();
      const auto c = r.split(a);
      for (std::size_t i = 0; i < c.size(); ++i) out.push_back(elem_to_json(*r.factors()[i], c[i]));
      return out;
    }
    case Recipe::Kind::quotient:
      return elem_to_json(*r.quotient_base(), r.representative(a));
    default:
      return json(a);
  }
}

RingAutomorphism automorphism_from_json(const RingPtr& r, const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "identity") return RingAutomorphism::identity(r);
    if (s == "frobenius") return frobenius(r);
    if (s.rfind("swap:", 0) == 0) {
      const auto [a, b] = parse_swap(s);
      return swap_factors(r, a, b);
    }
    throw ValidationError("unknown automorphism: " + s);
  }
  if (!j.is_array() || j.size() != r->order()) throw ValidationError("automorphism image list must list every element");
  std::vector<Elem> img;
  for (const auto& e : j) img.push_back(elem_from_json(*r, e));
  return RingAutomorphism::make(r, std::move(img));
}

json automorphism_json(const RingAutomorphism& a) {
  json out = json::array();
  for (Elem x = 0; x < a.host()->order(); ++x) out.push_back(elem_to_json(*a.host(), a(x)));
  return out;
}

CoordPerm sym_perm_from_json(std::size_t k, const json& j) {
  CoordPerm perm = identity_perm(k);
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "identity") return perm;
    if (s.rfind("swap:", 0) == 0) {
      const auto [a, b] = parse_swap(s);
      if (a >= k || b >= k) throw ValidationError("swap index out of range");
      std::swap(perm[a], perm[b]);
      return perm;
    }
    throw ValidationError("unknown coordinate permutation: " + s);
  }
  perm = j.get<CoordPerm>();
  check_perm(perm, k);
  return perm;
}

}  // namespace ringexp::io
