#include "ringexp/chain.hpp"

#include "ringexp/errors.hpp"

#include <algorithm>

namespace ringexp {

namespace {

std::string cut_str(std::int64_t c) { return c == kInf ? "inf" : std::to_string(c); }

std::int64_t shift_cut(std::int64_t c, std::int64_t s) { return c == kInf ? kInf : c - s; }

}  // namespace

std::string ChainOpen::str() const { return "(" + cut_str(neg) + "," + cut_str(pos) + ")"; }

ChainOpen chain_meet(const ChainOpen& a, const ChainOpen& b) {
  return {std::min(a.neg, b.neg), std::min(a.pos, b.pos)};
}

bool chain_subset(const ChainOpen& a, const ChainOpen& b) { return a.neg <= b.neg && a.pos <= b.pos; }

ChainCover chain_make_cover(std::vector<ChainOpen> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

bool chain_is_cover(const ChainCover& u) {
  const bool pos = std::any_of(u.begin(), u.end(), [](const ChainOpen& o) { return o.pos == kInf; });
  const bool neg = std::any_of(u.begin(), u.end(), [](const ChainOpen& o) { return o.neg == kInf; });
  return pos && neg;
}

ChainCover chain_normalize(const ChainCover& u) {
  std::vector<ChainOpen> out;
  for (const auto& a : u) {
    const bool dominated =
        std::any_of(u.begin(), u.end(), [&](const ChainOpen& b) { return b != a && chain_subset(a, b); });
    if (!dominated) out.push_back(a);
  }
  return chain_make_cover(std::move(out));
}

ChainCover chain_wedge(const ChainCover& a, const ChainCover& b) {
  std::vector<ChainOpen> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(chain_meet(x, y));
  return chain_make_cover(std::move(out));
}

bool chain_refines(const ChainCover& a, const ChainCover& b) {
  return std::all_of(a.begin(), a.end(), [&](const ChainOpen& x) {
    return std::any_of(b.begin(), b.end(), [&](const ChainOpen& y) { return chain_subset(x, y); });
  });
}

ChainCover chain_pull(const ChainCover& u, std::int64_t s) {
  std::vector<ChainOpen> out;
  for (const auto& o : u) out.push_back({shift_cut(o.neg, s), shift_cut(o.pos, s)});
  return chain_make_cover(std::move(out));
}

std::string chain_str(const ChainCover& u) {
  std::string s = "{";
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + u[i].str();
  return s + "}";
}

std::vector<ChainCover> chain_irredundant_covers(std::int64_t lo, std::int64_t hi) {
  std::vector<ChainCover> out{{ChainOpen{}}};
  for (std::int64_t a = lo; a <= hi; ++a)
    for (std::int64_t b = lo; b <= hi; ++b) out.push_back(chain_make_cover({{a, kInf}, {kInf, b}}));
  return out;
}

ChainCover chain_standard_cover() { return chain_make_cover({{kInf, -1}, {-1, kInf}}); }

ChainVerdict chain_positively_expansive(std::int64_t step, const ChainCover& u, std::int64_t m, std::size_t n_max) {
  if (!chain_is_cover(u)) throw DomainError("chain: candidate is not a cover");
  if (m < 0) throw DomainError("chain: negative cut window");
  ChainVerdict v;
  v.positive = true;
  v.candidate = u;
  const ChainCover base = chain_normalize(u);
  v.windows.push_back(base);
  bool fixpoint = false;
  while (v.windows.size() <= n_max) {
    ChainCover next = chain_normalize(chain_wedge(base, chain_pull(v.windows.back(), step)));
    if (next == v.windows.back()) {
      fixpoint = true;
      v.cycle_start = v.windows.size() - 1;
      v.cycle_length = 1;
      break;
    }
    v.windows.push_back(std::move(next));
  }
  for (const auto& adv : chain_irredundant_covers(-m, m)) {
    auto it = std::find_if(v.windows.begin(), v.windows.end(), [&](const ChainCover& w) { return chain_refines(w, adv); });
    if (it == v.windows.end()) {
      v.n_table.clear();
      v.refuter = adv;
      v.status = fixpoint ? Status::Refuted : Status::UnknownAtBound;
      v.note = fixpoint ? "windows reach a fixpoint that does not refine the adversary"
                        : "no window up to the step bound refines the adversary";
      return v;
    }
    v.n_table.emplace_back(adv, static_cast<std::size_t>(it - v.windows.begin()));
  }
  v.status = Status::Proved;
  v.witness = u;
  v.exact = false;
  v.note = "every adversary with cuts in [-" + std::to_string(m) + "," + std::to_string(m) + "] is refined";
  return v;
}

ChainVerdict chain_positive_sweep(std::int64_t step, std::int64_t m, std::size_t n_max) {
  if (m < 1) throw DomainError("chain: sweep needs m >= 1");
  ChainVerdict out;
  out.positive = true;
  bool unknown = false;
  for (const auto& c : chain_irredundant_covers(-(m - 1), m - 1)) {
    auto v = chain_positively_expansive(step, c, m, n_max);
    if (v.proved()) {
      v.rejected = std::move(out.rejected);
      return v;
    }
    if (v.status == Status::UnknownAtBound) unknown = true;
    out.rejected.emplace_back(c, *v.refuter);
  }
  out.status = unknown ? Status::UnknownAtBound : Status::Refuted;
  if (!out.rejected.empty()) out.refuter = out.rejected.front().second;
  out.note = "candidates with cuts in [-" + std::to_string(m - 1) + "," + std::to_string(m - 1) + "]";
  return out;
}

ChainCover chain_minimal_certificate(const ChainCover& candidate) {
  std::int64_t c = 0;
  bool any = false;
  for (const auto& o : candidate)
    for (auto cut : {o.neg, o.pos})
      if (cut != kInf) {
        c = any ? std::max(c, cut) : cut;
        any = true;
      }
  return chain_make_cover({{kInf, c - 1}, {c - 1, kInf}});
}

ChainVerdict chain_minimal_cover(std::int64_t m) {
  ChainVerdict out;
  for (const auto& c : chain_irredundant_covers(-m, m)) {
    const auto cert = chain_minimal_certificate(c);
    if (!chain_is_cover(cert) || chain_refines(c, cert))
      throw InvariantViolation("chain: certificate does not defeat " + chain_str(c));
    out.rejected.emplace_back(c, cert);
  }
  out.status = Status::Refuted;
  out.refuter = out.rejected.front().second;
  out.note = "candidates with cuts in [-" + std::to_string(m) + "," + std::to_string(m) + "]";
  return out;
}

}  // namespace ringexp
