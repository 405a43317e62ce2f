#include "taulab/covers.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace taulab {

void CoverSystem::validate() const {
  if (ground_size < 1) throw InputError("cover system: ground_size must be >= 1");
  for (const auto& s : sets)
    for (int x : s)
      if (x < 0 || x >= ground_size) throw InputError("cover system: point out of range");
}

bool CoverSystem::set_contains(int index, int point) const {
  const auto& s = sets[index];
  return std::find(s.begin(), s.end(), point) != s.end();
}

void FiniteBudget::validate() const {
  if (q < 1) throw InputError("budget: q must be >= 1");
  if (e < 0) throw InputError("budget: e must be >= 0");
  if (k < 1) throw InputError("budget: k must be >= 1");
}

namespace {

bool set_equals_ground(const std::vector<int>& s, int ground) {
  std::vector<bool> seen(ground, false);
  int distinct = 0;
  for (int x : s)
    if (!seen[x]) {
      seen[x] = true;
      ++distinct;
    }
  return distinct == ground;
}

}  // namespace

CoverKindSet classify_cover(const CoverSystem& cs, const FiniteBudget& b) {
  cs.validate();
  b.validate();
  const int G = cs.ground_size;
  CoverKindSet out;

  std::vector<int> member_count(G, 0);  // sets containing each point
  std::vector<int> miss_count(G, 0);    // sets missing each point
  std::vector<bool> proper(cs.sets.size());
  for (std::size_t i = 0; i < cs.sets.size(); ++i) {
    std::vector<bool> in(G, false);
    for (int x : cs.sets[i]) in[x] = true;
    proper[i] = !set_equals_ground(cs.sets[i], G);
    for (int x = 0; x < G; ++x) (in[x] ? member_count : miss_count)[x]++;
  }

  const bool union_is_ground =
      std::all_of(member_count.begin(), member_count.end(), [](int c) { return c > 0; });
  out.is_cover = union_is_ground && std::all_of(proper.begin(), proper.end(), [](bool p) { return p; });
  out.is_large =
      std::all_of(member_count.begin(), member_count.end(), [&](int c) { return c >= b.q; });
  out.is_gamma = static_cast<int>(cs.sets.size()) >= b.q &&
                 std::all_of(miss_count.begin(), miss_count.end(),
                             [&](int c) { return c <= b.e; });

  // k-cover: every subset of at most k points sits inside one proper member.
  out.is_k_cover = true;
  std::vector<int> subset;
  const std::function<bool(int, int)> every_subset = [&](int start, int remaining) -> bool {
    bool inside_some = false;
    for (std::size_t i = 0; i < cs.sets.size() && !inside_some; ++i) {
      if (!proper[i]) continue;
      inside_some = std::all_of(subset.begin(), subset.end(),
                                [&](int x) { return cs.set_contains(static_cast<int>(i), x); });
    }
    if (!inside_some) return false;
    if (remaining == 0) return true;
    for (int x = start; x < G; ++x) {
      subset.push_back(x);
      const bool ok = every_subset(x + 1, remaining - 1);
      subset.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  out.is_k_cover = every_subset(0, std::min(b.k, G));

  // tau: large, and per point pair one of the one-sided difference counts is
  // within the budget.
  out.is_tau = out.is_large;
  for (int x = 0; x < G && out.is_tau; ++x)
    for (int y = x + 1; y < G && out.is_tau; ++y) {
      int xy = 0, yx = 0;
      for (std::size_t i = 0; i < cs.sets.size(); ++i) {
        const bool inx = cs.set_contains(static_cast<int>(i), x);
        const bool iny = cs.set_contains(static_cast<int>(i), y);
        xy += inx && !iny;
        yx += iny && !inx;
      }
      if (std::min(xy, yx) > b.e) out.is_tau = false;
    }
  return out;
}

bool has_kind(const CoverKindSet& kinds, CoverKind kind) {
  switch (kind) {
    case CoverKind::Cover: return kinds.is_cover;
    case CoverKind::Large: return kinds.is_large;
    case CoverKind::KCover: return kinds.is_k_cover;
    case CoverKind::Tau: return kinds.is_tau;
    case CoverKind::Gamma: return kinds.is_gamma;
  }
  return false;
}

const char* kind_name(CoverKind kind) {
  switch (kind) {
    case CoverKind::Cover: return "cover";
    case CoverKind::Large: return "large";
    case CoverKind::KCover: return "k-cover";
    case CoverKind::Tau: return "tau";
    case CoverKind::Gamma: return "gamma";
  }
  return "?";
}

std::vector<std::uint8_t> marczewski(const CoverSystem& cs, int point) {
  cs.validate();
  if (point < 0 || point >= cs.ground_size) throw InputError("marczewski: point out of range");
  std::vector<std::uint8_t> bits(cs.sets.size(), 0);
  for (std::size_t i = 0; i < cs.sets.size(); ++i)
    bits[i] = cs.set_contains(static_cast<int>(i), point) ? 1 : 0;
  return bits;
}

PsiImage psi_image(int ground_size, const std::vector<CoverSystem>& covers) {
  if (ground_size < 1) throw InputError("psi_image: ground_size must be >= 1");
  PsiImage out;
  std::size_t maxlen = 0;
  for (const auto& cv : covers) {
    cv.validate();
    if (cv.ground_size != ground_size)
      throw InputError("psi_image: covers must share one ground set");
    out.original_lengths.push_back(cv.sets.size());
    maxlen = std::max(maxlen, cv.sets.size());
  }
  out.padded_to = maxlen;
  const int R = static_cast<int>(covers.size());
  const int C = static_cast<int>(maxlen);
  for (int x = 0; x < ground_size; ++x) {
    BinaryArray a = BinaryArray::filled(R, C, 0, 0);
    for (int n = 0; n < R; ++n)
      for (std::size_t m = 0; m < covers[n].sets.size(); ++m)
        a.bits[n][m] = covers[n].set_contains(static_cast<int>(m), x) ? 1 : 0;
    out.family.members.push_back(std::move(a));
  }
  return out;
}

void assert_gamma_tails(ArrayFamily& fam, int e) {
  if (e < 0) throw InputError("assert_gamma_tails: e must be >= 0");
  fam.validate();
  for (std::size_t p = 0; p < fam.members.size(); ++p) {
    const auto& a = fam.members[p];
    for (int n = 0; n < a.rows; ++n) {
      int zeros = 0;
      for (int m = 0; m < a.cols; ++m) zeros += a.bits[n][m] == 0;
      if (zeros > e)
        throw InputError("assert_gamma_tails: member " + std::to_string(p) + " row " +
                         std::to_string(n) + " misses " + std::to_string(zeros) +
                         " sets, budget " + std::to_string(e));
    }
  }
  for (auto& a : fam.members) std::fill(a.tail.begin(), a.tail.end(), 1);
}

// ---------------------------------------------------------------------------
// Selection search
// ---------------------------------------------------------------------------

CoverSystem selected_family(const SelectionWitness& w, const std::vector<CoverSystem>& covers) {
  CoverSystem out;
  out.ground_size = covers.empty() ? 1 : covers.front().ground_size;
  switch (w.principle) {
    case Principle::S1:
      for (std::size_t n = 0; n < covers.size(); ++n)
        out.sets.push_back(covers[n].sets[w.picks[n]]);
      break;
    case Principle::Sfin:
      for (std::size_t n = 0; n < covers.size(); ++n)
        for (int i : w.finite_picks[n]) out.sets.push_back(covers[n].sets[i]);
      break;
    case Principle::Ufin:
      for (std::size_t n = 0; n < covers.size(); ++n) {
        std::vector<bool> in(out.ground_size, false);
        for (int i : w.finite_picks[n])
          for (int x : covers[n].sets[i]) in[x] = true;
        std::vector<int> uni;
        for (int x = 0; x < out.ground_size; ++x)
          if (in[x]) uni.push_back(x);
        out.sets.push_back(std::move(uni));
      }
      break;
  }
  return out;
}

std::optional<SelectionWitness> check_selection(Principle principle, CoverKind source_kind,
                                                CoverKind target_kind,
                                                const std::vector<CoverSystem>& covers,
                                                const FiniteBudget& b, int w,
                                                SearchBudget& budget) {
  b.validate();
  if (w < 0) throw InputError("selection: w must be >= 0");
  int ground = covers.empty() ? 1 : covers.front().ground_size;
  for (std::size_t n = 0; n < covers.size(); ++n) {
    covers[n].validate();
    if (covers[n].ground_size != ground)
      throw InputError("selection: covers must share one ground set");
    if (!has_kind(classify_cover(covers[n], b), source_kind))
      throw InputError("selection: cover " + std::to_string(n) +
                       " does not classify as source kind " + kind_name(source_kind));
  }
  if (principle == Principle::Ufin) {
    // The hypothesis excludes sequences with finite subcovers.
    for (std::size_t n = 0; n < covers.size(); ++n) {
      const auto subs = bounded_subsets(static_cast<int>(covers[n].sets.size()), w);
      for (const auto& sub : subs) {
        std::vector<bool> in(ground, false);
        for (int i : sub)
          for (int x : covers[n].sets[i]) in[x] = true;
        if (std::all_of(in.begin(), in.end(), [](bool v) { return v; }))
          throw InputError("selection: cover " + std::to_string(n) +
                           " contains a subcover of size <= " + std::to_string(w));
      }
    }
  }

  const std::size_t N = covers.size();
  SelectionWitness witness;
  witness.principle = principle;
  const auto target_ok = [&](const SelectionWitness& cand) {
    return has_kind(classify_cover(selected_family(cand, covers), b), target_kind);
  };

  if (principle == Principle::S1) {
    witness.picks.assign(N, 0);
    const std::function<std::optional<SelectionWitness>(std::size_t)> dfs =
        [&](std::size_t n) -> std::optional<SelectionWitness> {
      if (n == N) {
        budget.tick();
        if (target_ok(witness)) return witness;
        return std::nullopt;
      }
      for (std::size_t i = 0; i < covers[n].sets.size(); ++i) {
        witness.picks[n] = static_cast<int>(i);
        if (auto r = dfs(n + 1)) return r;
      }
      return std::nullopt;
    };
    if (!covers.empty() &&
        std::any_of(covers.begin(), covers.end(), [](const auto& cv) { return cv.sets.empty(); }))
      return std::nullopt;  // no choice possible from an empty enumeration
    return dfs(0);
  }

  // Sfin / Ufin: per cover an index set of size <= w, in (size, lex) order.
  std::vector<std::vector<std::vector<int>>> cands;
  cands.reserve(N);
  for (const auto& cv : covers)
    cands.push_back(bounded_subsets(static_cast<int>(cv.sets.size()), w));
  witness.finite_picks.assign(N, {});
  const std::function<std::optional<SelectionWitness>(std::size_t)> dfs =
      [&](std::size_t n) -> std::optional<SelectionWitness> {
    if (n == N) {
      budget.tick();
      if (target_ok(witness)) return witness;
      return std::nullopt;
    }
    for (const auto& sub : cands[n]) {
      witness.finite_picks[n] = sub;
      if (auto r = dfs(n + 1)) return r;
    }
    return std::nullopt;
  };
  return dfs(0);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad JSON: ") + ex.what());
  }
}

}  // namespace

std::string cover_to_json(const CoverSystem& cs) {
  ordered_json j;
  j["ground"] = cs.ground_size;
  j["sets"] = cs.sets;
  return j.dump();
}

CoverSystem cover_from_json(const std::string& text) {
  const auto j = parse(text);
  CoverSystem cs;
  try {
    cs.ground_size = j.at("ground").get<int>();
    cs.sets = j.at("sets").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad cover JSON: ") + ex.what());
  }
  cs.validate();
  return cs;
}

std::vector<CoverSystem> covers_from_json(const std::string& text, int* ground_out) {
  const auto j = parse(text);
  std::vector<CoverSystem> out;
  int ground = 0;
  try {
    ground = j.at("ground").get<int>();
    for (const auto& item : j.at("covers")) {
      CoverSystem cs;
      cs.ground_size = ground;
      cs.sets = item.get<std::vector<std::vector<int>>>();
      cs.validate();
      out.push_back(std::move(cs));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad covers JSON: ") + ex.what());
  }
  if (ground_out) *ground_out = ground;
  return out;
}

std::string selection_to_json(const SelectionWitness& w) {
  ordered_json j;
  switch (w.principle) {
    case Principle::S1: j["principle"] = "S1"; break;
    case Principle::Sfin: j["principle"] = "Sfin"; break;
    case Principle::Ufin: j["principle"] = "Ufin"; break;
  }
  if (w.principle == Principle::S1)
    j["picks"] = w.picks;
  else
    j["picks"] = w.finite_picks;
  return j.dump();
}

}  // namespace taulab
