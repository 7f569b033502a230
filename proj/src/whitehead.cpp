#include "autqm/whitehead.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include "autqm/errors.hpp"

namespace autqm {

std::vector<Automorphism> signed_permutations(int rank) {
  std::vector<Automorphism> out;
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 1);
  const std::vector<int> identity = perm;
  do {
    for (unsigned signs = 0; signs < (1u << rank); ++signs) {
      std::vector<Elementary> trace;
      if (perm != identity) trace.push_back(Elementary::permutation_of(perm));
      for (int i = 0; i < rank; ++i) {
        if (signs & (1u << i)) trace.push_back(Elementary::inversion(i + 1));
      }
      out.push_back(Automorphism::from_trace(trace, rank));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Automorphism> whitehead_autos(int rank) {
  if (rank < 2) throw MalformedInput("Whitehead automorphisms need rank >= 2");
  std::vector<Automorphism> out = signed_permutations(rank);

  // Type II: multiplier a, cut set A with a in A and a^-1 not in A. For
  // each other generator x, membership of x and x^-1 in A decides the image:
  // x a, a^-1 x, a^-1 x a, or x.
  for (int key = 1; key <= 2 * rank; ++key) {
    const Letter a = letter_from_key(key);
    std::vector<int> others;
    for (int x = 1; x <= rank; ++x) {
      if (x != std::abs(a)) others.push_back(x);
    }
    const unsigned subsets = 1u << (2 * others.size());
    for (unsigned mask = 0; mask < subsets; ++mask) {
      std::vector<Elementary> trace;
      for (std::size_t i = 0; i < others.size(); ++i) {
        const bool has_x = mask & (1u << (2 * i));
        const bool has_inv = mask & (1u << (2 * i + 1));
        if (has_x) trace.push_back(Elementary::transvection(others[i], a, Side::Right));
        if (has_inv) trace.push_back(Elementary::transvection(others[i], -a, Side::Left));
      }
      out.push_back(Automorphism::from_trace(trace, rank));
    }
  }

  std::vector<Automorphism> deduped;
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
  for (auto& phi : out) {
    const std::size_t h = std::hash<Automorphism>{}(phi);
    auto& bucket = buckets[h];
    const bool dup = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) {
      return deduped[i].images() == phi.images();
    });
    if (!dup) {
      bucket.push_back(deduped.size());
      deduped.push_back(std::move(phi));
    }
  }
  return deduped;
}

namespace {

Word apply_cyclic(const Automorphism& phi, const Word& c) {
  return conjugacy_class(phi(c)).word();
}

const std::vector<Automorphism>& cached_autos(int rank) {
  thread_local std::unordered_map<int, std::vector<Automorphism>> cache;
  auto it = cache.find(rank);
  if (it == cache.end()) it = cache.emplace(rank, whitehead_autos(rank)).first;
  return it->second;
}

}  // namespace

Minimization minimize(const Word& w) {
  Minimization out;
  Word current = conjugacy_class(w).word();
  if (w.rank() < 2 || current.size() <= 1) {
    out.min_word = current;
    return out;
  }
  const auto& autos = cached_autos(w.rank());
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& phi : autos) {
      Word next = apply_cyclic(phi, current);
      if (next.size() < current.size()) {
        out.trace.push_back(WhiteheadMove{phi, current, next});
        current = std::move(next);
        improved = true;
        break;
      }
    }
  }
  out.min_word = current;
  return out;
}

OrbitLevel min_orbit_level(const Word& w, std::size_t cutoff) {
  OrbitLevel level;
  const CyclicWord start(minimize(w).min_word);
  level.words.push_back(start);
  if (w.rank() < 2) return level;
  const auto& autos = cached_autos(w.rank());
  std::unordered_map<CyclicWord, std::size_t> index{{start, 0}};
  for (std::size_t i = 0; i < level.words.size(); ++i) {
    const Word current = level.words[i].word();
    for (std::size_t a = 0; a < autos.size(); ++a) {
      CyclicWord next = conjugacy_class(autos[a](current));
      if (next.size() != current.size()) continue;
      auto [it, inserted] = index.emplace(next, level.words.size());
      if (inserted) {
        if (level.words.size() >= cutoff) {
          throw CutoffExceeded("orbit level exceeds " + std::to_string(cutoff) +
                               " words; partial level discarded");
        }
        level.words.push_back(std::move(next));
      }
      if (it->second != i) level.moves.push_back(OrbitEdge{i, it->second, a});
    }
  }
  return level;
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw MalformedInput("the identity is not primitive");
  return minimize(w).min_word.size() == 1;
}

bool in_proper_free_factor(const Word& w, std::size_t cutoff) {
  if (w.empty()) throw MalformedInput("free factor membership needs w != 1");
  if (w.rank() < 2) return false;
  const auto level = min_orbit_level(w, cutoff);
  for (const auto& c : level.words) {
    for (int x = 1; x <= w.rank(); ++x) {
      if (!c.word().uses_generator(x)) return true;
    }
  }
  return false;
}

namespace {

int count_components(int vertices, const std::vector<std::pair<int, int>>& edges,
                     int removed) {
  std::vector<int> parent(static_cast<std::size_t>(vertices));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  for (auto [u, v] : edges) {
    if (u == removed || v == removed) continue;
    parent[static_cast<std::size_t>(find(u))] = find(v);
  }
  int components = 0;
  for (int v = 0; v < vertices; ++v) {
    if (v != removed && find(v) == v) ++components;
  }
  return components;
}

}  // namespace

WhiteheadGraph whitehead_graph(const Word& w) {
  if (w.empty()) throw MalformedInput("Whitehead graph of the identity");
  if (!is_cyclically_reduced(w)) {
    throw MalformedInput("Whitehead graph needs a cyclically reduced word");
  }
  WhiteheadGraph g;
  g.rank = w.rank();
  const int vertices = 2 * w.rank();
  std::vector<std::pair<int, int>> indexed;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    Letter x = -w[i];
    Letter y = w[(i + 1) % n];
    if (letter_key(x) > letter_key(y)) std::swap(x, y);
    g.edges.emplace_back(x, y);
    indexed.emplace_back(letter_key(x) - 1, letter_key(y) - 1);
  }
  std::sort(g.edges.begin(), g.edges.end(), [](auto p, auto q) {
    return std::pair(letter_key(p.first), letter_key(p.second)) <
           std::pair(letter_key(q.first), letter_key(q.second));
  });
  const int base = count_components(vertices, indexed, -1);
  g.connected = base == 1;
  for (int v = 0; v < vertices && !g.has_cut_vertex; ++v) {
    g.has_cut_vertex = count_components(vertices, indexed, v) > base;
  }
  return g;
}

}  // namespace autqm
