#include "autqm/norms.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "autqm/errors.hpp"

namespace autqm {

std::vector<Word> orbit_closure(std::span<const Word> s, std::span<const Automorphism> a) {
  std::vector<Word> out;
  std::unordered_set<Word> seen;
  for (const auto& alpha : a) {
    for (const auto& w : s) {
      Word image = alpha(w);
      if (seen.insert(image).second) out.push_back(std::move(image));
    }
  }
  return out;
}

bool WitnessFactor::consistent(std::span<const Word> generators) const {
  switch (kind) {
    case Kind::Generator:
      return generator < generators.size() && generators[generator] == value;
    case Kind::Autocommutator:
      return phi && autocommutator(*phi, first) == value;
    case Kind::Commutator:
      return commutator(first, second) == value;
  }
  return false;
}

bool NormResult::replays(const Word& g, std::span<const Word> generators) const {
  if (status != NormStatus::Finite) return false;
  if (witness.size() != static_cast<std::size_t>(value)) return false;
  WordBuilder product(g.rank());
  for (const auto& f : witness) {
    if (f.value.rank() != g.rank() || !f.consistent(generators)) return false;
    product.append(f.value);
  }
  return std::move(product).build() == g;
}

namespace {

enum class Reach { Found, Beyond, Unreachable };

struct Distance {
  Reach reach = Reach::Beyond;
  long value = 0;
};

/// Length of the shortest product of `gens` equal to g, if at most cutoff.
Distance bidirectional_distance(const Word& g, const std::vector<Word>& gens,
                                const std::vector<Word>& inverses, long cutoff,
                                std::size_t budget) {
  if (g.empty()) return {Reach::Found, 0};
  std::unordered_set<Word> seen_fwd{Word(g.rank())};
  std::unordered_set<Word> seen_bwd{g};
  std::vector<Word> fwd{Word(g.rank())};
  std::vector<Word> bwd{g};
  long df = 0;
  long db = 0;
  while (df + db < cutoff) {
    const bool forward = fwd.size() <= bwd.size();
    auto& frontier = forward ? fwd : bwd;
    auto& seen = forward ? seen_fwd : seen_bwd;
    const auto& other = forward ? seen_bwd : seen_fwd;
    const auto& steps = forward ? gens : inverses;
    std::vector<Word> next;
    bool met = false;
    for (const auto& x : frontier) {
      for (const auto& s : steps) {
        Word y = multiply(x, s);
        if (!seen.insert(y).second) continue;
        if (other.contains(y)) met = true;
        next.push_back(std::move(y));
      }
    }
    if (forward) {
      ++df;
    } else {
      ++db;
    }
    // Frontiers were disjoint before this level, so every meeting point
    // found now lies at total distance df + db.
    if (met) return {Reach::Found, df + db};
    if (next.empty()) return {Reach::Unreachable, 0};
    if (seen_fwd.size() + seen_bwd.size() > budget) {
      throw CutoffExceeded("norm search exceeded " + std::to_string(budget) + " elements");
    }
    frontier = std::move(next);
  }
  return {Reach::Beyond, 0};
}

}  // namespace

NormResult bfs_norm(const Word& g, std::span<const Word> s, long cutoff,
                    std::size_t node_budget) {
  if (s.empty()) throw MalformedInput("generating set must be nonempty");
  std::vector<Word> gens;
  std::vector<std::size_t> original;
  std::unordered_set<Word> seen;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].rank() != g.rank()) throw RankMismatch(s[i].rank(), g.rank());
    if (s[i].empty() || !seen.insert(s[i]).second) continue;
    gens.push_back(s[i]);
    original.push_back(i);
  }
  std::vector<Word> inverses;
  for (const auto& w : gens) inverses.push_back(invert(w));

  NormResult result;
  result.cutoff = cutoff;
  if (g.empty()) return result;
  if (gens.empty()) {
    result.status = NormStatus::InfiniteFlagged;
    return result;
  }
  const Distance d = bidirectional_distance(g, gens, inverses, cutoff, node_budget);
  if (d.reach == Reach::Beyond) {
    result.status = NormStatus::GreaterThanCutoff;
    return result;
  }
  if (d.reach == Reach::Unreachable) {
    result.status = NormStatus::InfiniteFlagged;
    return result;
  }
  result.value = d.value;

  // Lexicographically least witness: take the first generator that leaves
  // a remainder one step closer.
  Word rest = g;
  for (long remaining = d.value; remaining > 0; --remaining) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Word next = multiply(inverses[i], rest);
      const Distance dn =
          bidirectional_distance(next, gens, inverses, remaining - 1, node_budget);
      if (dn.reach == Reach::Found) {
        WitnessFactor f;
        f.kind = WitnessFactor::Kind::Generator;
        f.value = gens[i];
        f.generator = original[i];
        result.witness.push_back(std::move(f));
        rest = std::move(next);
        break;
      }
    }
  }
  return result;
}

TransvectionWitness transvection_witness(const Word& g, int x_index, long n) {
  const int rank = g.rank();
  if (x_index < 1 || x_index > rank) throw MalformedInput("generator index out of range");
  if (g.uses_generator(x_index)) {
    throw MalformedInput("the word uses the transvected generator");
  }
  const Word gn = power(g, n);
  // Left transvections compose so that the first one applied ends up
  // innermost: trace [t_ym, ..., t_y1] sends x to y1 ... ym x.
  std::vector<Elementary> trace;
  for (auto it = gn.letters().rbegin(); it != gn.letters().rend(); ++it) {
    trace.push_back(Elementary::transvection(x_index, *it, Side::Left));
  }
  return {Automorphism::from_trace(trace, rank), Word::generator(rank, x_index)};
}

namespace {

using Member = std::function<std::optional<WitnessFactor>(const Word&)>;

/// Least k <= k_max with g a product of k members; level k - 1 products are
/// built from `entries` only.
NormResult product_search(const Word& g, const std::vector<WitnessFactor>& entries,
                          const Member& member, int k_max, std::size_t level_cap) {
  NormResult result;
  result.cutoff = k_max;
  if (g.empty()) return result;

  struct Partial {
    Word value;
    std::vector<std::size_t> factors;
  };
  std::vector<Partial> level{{Word(g.rank()), {}}};
  std::unordered_set<Word> seen{Word(g.rank())};
  for (int k = 1; k <= k_max; ++k) {
    for (const auto& x : level) {
      if (auto last = member(multiply(invert(x.value), g))) {
        result.value = k;
        for (std::size_t i : x.factors) result.witness.push_back(entries[i]);
        result.witness.push_back(std::move(*last));
        return result;
      }
    }
    if (k == k_max) break;
    std::vector<Partial> next;
    for (const auto& x : level) {
      for (std::size_t i = 0; i < entries.size() && next.size() < level_cap; ++i) {
        Word y = multiply(x.value, entries[i].value);
        if (!seen.insert(y).second) continue;
        auto factors = x.factors;
        factors.push_back(i);
        next.push_back({std::move(y), std::move(factors)});
      }
    }
    level = std::move(next);
  }
  result.status = NormStatus::GreaterThanCutoff;
  return result;
}

struct ImagesHash {
  std::size_t operator()(const std::vector<Word>& ws) const noexcept {
    std::size_t h = 0;
    for (const auto& w : ws) h = h * 1000003u ^ std::hash<Word>{}(w);
    return h;
  }
};

}  // namespace

NormResult acl_upper(const Word& g, const AclParams& params) {
  if (params.pool_depth < 0 || params.elem_len < 0 || params.k_max < 0) {
    throw MalformedInput("search parameters must be nonnegative");
  }
  const int rank = g.rank();
  if (g.empty()) return NormResult{};

  std::vector<Automorphism> pool;
  std::unordered_set<std::vector<Word>, ImagesHash> pool_seen;
  auto add_auto = [&](Automorphism phi) {
    if (pool_seen.insert(phi.images()).second) pool.push_back(std::move(phi));
  };
  for (auto& phi : enumerate_composites(rank, params.pool_depth)) add_auto(std::move(phi));
  const auto short_words = enumerate_words(rank, params.elem_len);
  for (const auto& u : short_words) {
    if (!u.empty()) add_auto(ad(u));
  }

  std::vector<Word> hs;
  std::unordered_set<Word> h_seen;
  auto add_h = [&](Word h) {
    if (!h.empty() && h_seen.insert(h).second) hs.push_back(std::move(h));
  };
  for (const auto& u : short_words) add_h(u);
  const auto root = root_decomposition(g);
  for (long j = 1; j <= root.exponent; ++j) {
    for (long sign : {1L, -1L}) {
      add_h(root.conjugator * power(root.root, sign * j) * invert(root.conjugator));
    }
  }
  for (int x = 1; x <= rank; ++x) add_h(Word::generator(rank, x));

  std::vector<WitnessFactor> entries;
  std::unordered_map<Word, std::size_t> table;
  for (const auto& phi : pool) {
    for (const auto& h : hs) {
      Word v = autocommutator(phi, h);
      if (v.empty() || table.contains(v)) continue;
      table.emplace(v, entries.size());
      WitnessFactor f;
      f.kind = WitnessFactor::Kind::Autocommutator;
      f.value = std::move(v);
      f.phi = phi;
      f.first = h;
      entries.push_back(std::move(f));
    }
  }

  Member member = [&](const Word& x) -> std::optional<WitnessFactor> {
    if (x.empty()) return std::nullopt;
    if (auto it = table.find(x); it != table.end()) return entries[it->second];
    if (rank < 2) return std::nullopt;
    for (int j = 1; j <= rank; ++j) {
      if (x.uses_generator(j)) continue;
      auto tw = transvection_witness(x, j, 1);
      WitnessFactor f;
      f.kind = WitnessFactor::Kind::Autocommutator;
      f.value = x;
      f.phi = std::move(tw.phi);
      f.first = std::move(tw.x);
      return f;
    }
    return std::nullopt;
  };
  return product_search(g, entries, member, params.k_max, params.level_cap);
}

NormResult cl_upper(const Word& g, int len_cap, int k_max, std::size_t level_cap) {
  if (len_cap < 0 || k_max < 0) throw MalformedInput("search parameters must be nonnegative");
  if (g.empty()) return NormResult{};
  const auto words = enumerate_words(g.rank(), len_cap);
  std::vector<WitnessFactor> entries;
  std::unordered_map<Word, std::size_t> table;
  for (const auto& u : words) {
    for (const auto& v : words) {
      Word c = commutator(u, v);
      if (c.empty() || table.contains(c)) continue;
      table.emplace(c, entries.size());
      WitnessFactor f;
      f.kind = WitnessFactor::Kind::Commutator;
      f.value = std::move(c);
      f.first = u;
      f.second = v;
      entries.push_back(std::move(f));
    }
  }
  Member member = [&](const Word& x) -> std::optional<WitnessFactor> {
    if (auto it = table.find(x); it != table.end()) return entries[it->second];
    return std::nullopt;
  };
  return product_search(g, entries, member, k_max, level_cap);
}

Rational bavard_bound(const Quasimorphism& f, const Word& g) {
  const auto& d = f.defect_bound();
  if (!d || *d <= Rational(0)) throw MalformedInput("duality bound needs a positive defect bound");
  return abs(f(g)) / (Rational(2) * *d);
}

SaclEstimate sacl_estimate(const Word& g, int n_max, const AclParams& params,
                           std::span<const Quasimorphism> family) {
  if (n_max < 1) throw MalformedInput("n_max must be >= 1");
  SaclEstimate est;
  for (long n = 1; n <= n_max; ++n) {
    SaclStep step{n, acl_upper(power(g, n), params)};
    if (step.acl.finite()) {
      const Rational ratio(step.acl.value, n);
      if (!est.upper || ratio < *est.upper) est.upper = ratio;
    }
    est.trace.push_back(std::move(step));
  }
  for (const auto& f : family) {
    if (f.rank() != g.rank()) throw RankMismatch(f.rank(), g.rank());
    const auto& d = f.defect_bound();
    if (!d || *d <= Rational(0)) continue;
    const Rational b = bavard_bound(f, g);
    if (f.aut_invariant_asserted()) {
      est.lower = std::max(est.lower, b);
    } else if (!f.invariance_group().empty()) {
      est.restricted_lower = std::max(est.restricted_lower, b);
    }
  }
  return est;
}

Rational prop32_bound(const Quasimorphism& f, std::span<const Word> s, const Word& g) {
  if (!f.defect_bound()) throw MalformedInput("the bound needs a numeric defect bound");
  Rational sup(0);
  for (const auto& w : s) sup = std::max(sup, abs(f(w)));
  const Rational denominator = sup + *f.defect_bound();
  if (denominator == Rational(0)) {
    throw MalformedInput("f vanishes on S and has defect 0; the bound is undefined");
  }
  return abs(f(g)) / denominator;
}

}  // namespace autqm
