#include "autqm/quasimorphism.hpp"

#include <algorithm>
#include <unordered_set>

#include "autqm/errors.hpp"

namespace autqm {

struct Quasimorphism::Node {
  QmKind kind = QmKind::Linear;
  int rank = 1;
  std::optional<Rational> defect;
  bool homogeneous = false;
  bool aut_asserted = false;
  std::vector<Automorphism> group;
  Word pattern;
  Word pattern_inverse;
  std::optional<Quasimorphism> inner;
  Homomorphism hom;
  std::vector<std::pair<Rational, Quasimorphism>> terms;
};

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<Word>& ws) const noexcept {
    std::size_t h = 0;
    for (const auto& w : ws) h = h * 1000003u ^ std::hash<Word>{}(w);
    return h;
  }
};

using ImageSet = std::unordered_set<std::vector<Word>, ImagesHash>;

/// Overlapping occurrences of `pattern` in `text`.
long count_occurrences(std::span<const Letter> text, std::span<const Letter> pattern) {
  if (pattern.size() > text.size()) return 0;
  long count = 0;
  const std::size_t last = text.size() - pattern.size();
  for (std::size_t p = 0; p <= last; ++p) {
    if (std::equal(pattern.begin(), pattern.end(), text.begin() + static_cast<long>(p))) {
      ++count;
    }
  }
  return count;
}

/// Start positions p in [0, |cycle|) where `pattern` occurs in cycle^infinity.
long count_periodic(std::span<const Letter> cycle, std::span<const Letter> pattern) {
  const std::size_t m = cycle.size();
  if (m == 0) return 0;
  long count = 0;
  for (std::size_t p = 0; p < m; ++p) {
    bool match = true;
    for (std::size_t j = 0; j < pattern.size() && match; ++j) {
      match = cycle[(p + j) % m] == pattern[j];
    }
    if (match) ++count;
  }
  return count;
}

/// Cyclically reduced core of a reduced letter sequence (as a subspan).
std::span<const Letter> cyclic_core(std::span<const Letter> letters) {
  std::size_t strip = 0;
  while (2 * strip + 1 < letters.size() &&
         letters[strip] == -letters[letters.size() - 1 - strip]) {
    ++strip;
  }
  return letters.subspan(strip, letters.size() - 2 * strip);
}

}  // namespace

Homomorphism Homomorphism::from_images(int source_rank, std::vector<Word> images) {
  if (source_rank < 1 || images.size() != static_cast<std::size_t>(source_rank)) {
    throw MalformedInput("homomorphism needs one image per source generator");
  }
  const int target = images.front().rank();
  for (const auto& w : images) {
    if (w.rank() != target) throw RankMismatch(w.rank(), target);
  }
  Homomorphism h;
  h.source_rank = source_rank;
  h.target_rank = target;
  h.images = std::move(images);
  return h;
}

Homomorphism Homomorphism::from_automorphism(const Automorphism& phi) {
  return from_images(phi.rank(), phi.images());
}

Word Homomorphism::operator()(const Word& w) const {
  if (w.rank() != source_rank) throw RankMismatch(w.rank(), source_rank);
  WordBuilder b(target_rank);
  for (Letter l : w.letters()) {
    const Word& img = images[static_cast<std::size_t>(std::abs(l) - 1)];
    if (l > 0) {
      b.append(img);
    } else {
      b.append_inverse(img);
    }
  }
  return std::move(b).build();
}

Rational brooks_defect_bound(std::size_t pattern_length) {
  return Rational(6 * static_cast<std::int64_t>(pattern_length));
}

int Quasimorphism::rank() const noexcept { return node_->rank; }
QmKind Quasimorphism::kind() const noexcept { return node_->kind; }
const std::optional<Rational>& Quasimorphism::defect_bound() const noexcept {
  return node_->defect;
}
bool Quasimorphism::homogeneous() const noexcept { return node_->homogeneous; }
const std::vector<Automorphism>& Quasimorphism::invariance_group() const noexcept {
  return node_->group;
}
bool Quasimorphism::aut_invariant_asserted() const noexcept { return node_->aut_asserted; }

const Word& Quasimorphism::pattern() const {
  if (node_->kind != QmKind::Brooks && node_->kind != QmKind::BrooksHomogeneous) {
    throw MalformedInput("not a Brooks quasimorphism");
  }
  return node_->pattern;
}

const Quasimorphism& Quasimorphism::inner() const {
  if (!node_->inner) throw MalformedInput("quasimorphism has no inner node");
  return *node_->inner;
}

const Homomorphism& Quasimorphism::homomorphism() const {
  if (node_->kind != QmKind::Pullback) throw MalformedInput("not a pullback");
  return node_->hom;
}

const std::vector<std::pair<Rational, Quasimorphism>>& Quasimorphism::terms() const {
  return node_->terms;
}

Rational Quasimorphism::operator()(const Word& g) const {
  if (g.rank() != node_->rank) throw RankMismatch(g.rank(), node_->rank);
  return evaluate_reduced(g.letters());
}

Rational Quasimorphism::evaluate_reduced(std::span<const Letter> letters) const {
  const Node& n = *node_;
  switch (n.kind) {
    case QmKind::Brooks:
      return Rational(count_occurrences(letters, n.pattern.letters()) -
                      count_occurrences(letters, n.pattern_inverse.letters()));
    case QmKind::BrooksHomogeneous: {
      auto core = cyclic_core(letters);
      return Rational(count_periodic(core, n.pattern.letters()) -
                      count_periodic(core, n.pattern_inverse.letters()));
    }
    case QmKind::Pullback:
      return (*n.inner)(n.hom(Word::reduce(letters, n.rank)));
    case QmKind::FiniteAverage: {
      const Word g = Word::reduce(letters, n.rank);
      Rational sum(0);
      for (const auto& alpha : n.group) sum += (*n.inner)(alpha(g));
      return sum / static_cast<std::int64_t>(n.group.size());
    }
    case QmKind::Linear: {
      Rational sum(0);
      for (const auto& [c, q] : n.terms) {
        if (c != Rational(0)) sum += c * q.evaluate_reduced(letters);
      }
      return sum;
    }
  }
  return Rational(0);
}

std::optional<std::size_t> Quasimorphism::locality_radius() const {
  switch (node_->kind) {
    case QmKind::Brooks:
      return node_->pattern.size() - 1;
    case QmKind::Linear: {
      std::size_t r = 0;
      for (const auto& [c, q] : node_->terms) {
        auto rq = q.locality_radius();
        if (!rq) return std::nullopt;
        r = std::max(r, *rq);
      }
      return r;
    }
    default:
      return std::nullopt;
  }
}

Quasimorphism brooks(const Word& w, std::optional<Rational> defect_bound) {
  if (w.empty()) throw MalformedInput("Brooks pattern must be nontrivial");
  auto n = std::make_shared<Quasimorphism::Node>();
  n->kind = QmKind::Brooks;
  n->rank = w.rank();
  n->pattern = w;
  n->pattern_inverse = invert(w);
  n->defect = defect_bound ? *defect_bound : brooks_defect_bound(w.size());
  n->homogeneous = false;
  return Quasimorphism(std::move(n));
}

Quasimorphism brooks_homogeneous(const Word& w, std::optional<Rational> defect_bound) {
  if (w.empty()) throw MalformedInput("Brooks pattern must be nontrivial");
  auto n = std::make_shared<Quasimorphism::Node>();
  n->kind = QmKind::BrooksHomogeneous;
  n->rank = w.rank();
  n->pattern = w;
  n->pattern_inverse = invert(w);
  // Homogenisation at most doubles the defect.
  n->defect = defect_bound ? *defect_bound : Rational(2) * brooks_defect_bound(w.size());
  n->homogeneous = true;
  return Quasimorphism(std::move(n));
}

Quasimorphism homogenise(const Quasimorphism& f) {
  Quasimorphism out = [&] {
    switch (f.kind()) {
      case QmKind::Brooks:
        return brooks_homogeneous(f.pattern(), Rational(2) * *f.defect_bound());
      case QmKind::BrooksHomogeneous:
        return f;
      case QmKind::Pullback:
        return pullback(homogenise(f.inner()), f.homomorphism());
      case QmKind::FiniteAverage:
        return finite_average(homogenise(f.inner()), f.invariance_group());
      case QmKind::Linear: {
        std::vector<std::pair<Rational, Quasimorphism>> terms;
        for (const auto& [c, q] : f.terms()) terms.emplace_back(c, homogenise(q));
        return linear_combination(f.rank(), std::move(terms));
      }
    }
    return f;
  }();
  return f.aut_invariant_asserted() ? assert_aut_invariant(out) : out;
}

Quasimorphism pullback(const Quasimorphism& f, const Homomorphism& hom) {
  if (hom.target_rank != f.rank()) throw RankMismatch(hom.target_rank, f.rank());
  auto n = std::make_shared<Quasimorphism::Node>();
  n->kind = QmKind::Pullback;
  n->rank = hom.source_rank;
  n->defect = f.defect_bound();
  n->homogeneous = f.homogeneous();
  n->inner = f;
  n->hom = hom;
  return Quasimorphism(std::move(n));
}

bool is_group(std::span<const Automorphism> group) {
  ImageSet members;
  for (const auto& a : group) members.insert(a.images());
  if (members.empty()) return false;
  for (const auto& a : group) {
    if (!members.contains(inverse(a).images())) return false;
    for (const auto& b : group) {
      if (!members.contains(compose(a, b).images())) return false;
    }
  }
  return true;
}

Quasimorphism finite_average(const Quasimorphism& f, std::span<const Automorphism> group) {
  std::vector<Automorphism> unique;
  ImageSet seen;
  for (const auto& a : group) {
    if (a.rank() != f.rank()) throw RankMismatch(a.rank(), f.rank());
    if (seen.insert(a.images()).second) unique.push_back(a);
  }
  if (!is_group(unique)) {
    throw MalformedInput("averaging set is not closed under composition and inverses");
  }
  auto n = std::make_shared<Quasimorphism::Node>();
  n->kind = QmKind::FiniteAverage;
  n->rank = f.rank();
  n->defect = f.defect_bound();
  n->homogeneous = f.homogeneous();
  n->inner = f;
  n->group = std::move(unique);
  return Quasimorphism(std::move(n));
}

Quasimorphism linear_combination(int rank,
                                 std::vector<std::pair<Rational, Quasimorphism>> terms) {
  auto n = std::make_shared<Quasimorphism::Node>();
  n->kind = QmKind::Linear;
  n->rank = rank;
  n->homogeneous = true;
  Rational bound(0);
  bool bounded = true;
  for (const auto& [c, q] : terms) {
    if (q.rank() != rank) throw RankMismatch(q.rank(), rank);
    n->homogeneous = n->homogeneous && q.homogeneous();
    if (q.defect_bound()) {
      bound += abs(c) * *q.defect_bound();
    } else {
      bounded = false;
    }
  }
  if (bounded) n->defect = bound;
  n->terms = std::move(terms);
  return Quasimorphism(std::move(n));
}

Quasimorphism assert_aut_invariant(const Quasimorphism& f) {
  auto n = std::make_shared<Quasimorphism::Node>(*f.node_);
  n->aut_asserted = true;
  return Quasimorphism(std::move(n));
}

HomogenisationEstimate homogenise_numeric(const Quasimorphism& f, const Word& g, long n) {
  if (n < 1) throw MalformedInput("homogenisation needs N >= 1");
  if (!f.defect_bound()) throw MalformedInput("homogenisation error needs a defect bound");
  return {f(power(g, n)) / n, *f.defect_bound() / n};
}

namespace {

/// f(g) + f(h) - f(gh) using a reusable buffer for gh.
Rational pair_defect(const Quasimorphism& f, const Word& g, const Word& h,
                     const Rational& fg, const Rational& fh,
                     std::vector<Letter>& buffer) {
  auto a = g.letters();
  auto b = h.letters();
  std::size_t cancel = 0;
  while (cancel < a.size() && cancel < b.size() &&
         a[a.size() - 1 - cancel] == -b[cancel]) {
    ++cancel;
  }
  buffer.assign(a.begin(), a.end() - static_cast<long>(cancel));
  buffer.insert(buffer.end(), b.begin() + static_cast<long>(cancel), b.end());
  return fg + fh - f.evaluate_reduced(buffer);
}

struct BestPair {
  Rational value{-1};
  Word g;
  Word h;

  void offer(const Rational& v, const Word& cg, const Word& ch) {
    if (v > value || (v == value && std::tie(cg, ch) < std::tie(g, h))) {
      value = v;
      g = cg;
      h = ch;
    }
  }
};

}  // namespace

DefectCertificate defect_enumerate_brute_force(const Quasimorphism& f, int max_len) {
  if (max_len < 0) throw MalformedInput("enumeration range must be >= 0");
  const auto words = enumerate_words(f.rank(), max_len);
  std::vector<Rational> values;
  values.reserve(words.size());
  for (const auto& w : words) values.push_back(f(w));
  std::vector<Letter> buffer;
  Rational best(-1);
  std::size_t bi = 0;
  std::size_t bj = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      Rational d = abs(pair_defect(f, words[i], words[j], values[i], values[j], buffer));
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  }
  DefectCertificate cert;
  cert.type = DefectCertificate::BoundType::EnumeratedLower;
  cert.value = best;
  cert.g = words[bi];
  cert.h = words[bj];
  cert.range = max_len;
  return cert;
}

DefectCertificate defect_enumerate(const Quasimorphism& f, int max_len) {
  if (max_len < 0) throw MalformedInput("enumeration range must be >= 0");
  const auto radius = f.locality_radius();
  if (!radius) return defect_enumerate_brute_force(f, max_len);

  // Write a reduced pair as g = g'c, h = c^-1 h' with g'h' reduced. For a
  // local tree the defect is J(g', c) + J(c^-1, h') - J(g', h'), where J
  // counts occurrences straddling a junction. That depends only on the last
  // r letters of g', the first r letters of c and the first r letters of h',
  // and truncating to those keeps the pair inside the range and can only
  // make it shortlex-smaller. So the truncated pairs realise every defect
  // value, and the least witness is among them.
  const int r = static_cast<int>(*radius);
  const auto pieces = enumerate_words(f.rank(), std::min(r, max_len));
  std::vector<Letter> buffer;
  BestPair best;
  for (const auto& c : pieces) {
    const int cl = static_cast<int>(c.size());
    const Word c_inv = invert(c);
    for (const auto& gp : pieces) {
      if (static_cast<int>(gp.size()) + cl > max_len) continue;
      if (!gp.empty() && !c.empty() && gp.back() == -c.front()) continue;
      const Word g = multiply(gp, c);
      const Rational fg = f(g);
      for (const auto& hp : pieces) {
        if (static_cast<int>(hp.size()) + cl > max_len) continue;
        if (!hp.empty() && !c.empty() && hp.front() == c.front()) continue;
        if (!gp.empty() && !hp.empty() && gp.back() == -hp.front()) continue;
        const Word h = multiply(c_inv, hp);
        best.offer(abs(pair_defect(f, g, h, fg, f(h), buffer)), g, h);
      }
    }
  }
  DefectCertificate cert;
  cert.type = DefectCertificate::BoundType::EnumeratedLower;
  cert.value = best.value;
  cert.g = best.g;
  cert.h = best.h;
  cert.range = max_len;
  return cert;
}

DefectCertificate declared_defect(const Quasimorphism& f) {
  if (!f.defect_bound()) throw MalformedInput("no declared defect bound");
  DefectCertificate cert;
  cert.type = DefectCertificate::BoundType::DeclaredUpper;
  cert.value = *f.defect_bound();
  cert.g = Word(f.rank());
  cert.h = Word(f.rank());
  return cert;
}

InvarianceReport check_invariance(const Quasimorphism& f,
                                  std::span<const Automorphism> autos,
                                  std::span<const Word> samples) {
  InvarianceReport report;
  for (std::size_t a = 0; a < autos.size(); ++a) {
    for (const auto& g : samples) {
      const Rational v = f(g);
      const Rational w = f(autos[a](g));
      ++report.checked;
      if (v != w) report.violations.push_back({a, g, v, w});
    }
  }
  return report;
}

ProductQuasimorphism::ProductQuasimorphism(Quasimorphism factor, int k, int n)
    : factor_(std::move(factor)), k_(k), n_(n) {
  if (n < 1 || k < 1 || k > n) {
    throw MalformedInput("product average needs 1 <= k <= n");
  }
}

std::optional<Rational> ProductQuasimorphism::defect_bound() const {
  if (!factor_.defect_bound()) return std::nullopt;
  return Rational(k_) * *factor_.defect_bound();
}

Rational ProductQuasimorphism::operator()(std::span<const Word> tuple) const {
  if (tuple.size() != static_cast<std::size_t>(n_)) {
    throw MalformedInput("tuple has " + std::to_string(tuple.size()) +
                         " coordinates, expected " + std::to_string(n_));
  }
  Rational sum(0);
  for (int i = 0; i < k_; ++i) sum += factor_(tuple[static_cast<std::size_t>(i)]);
  return sum;
}

ProductQuasimorphism product_average(const Quasimorphism& f, int k, int n) {
  return ProductQuasimorphism(f, k, n);
}

ProductDefectCertificate defect_enumerate(const ProductQuasimorphism& f, int max_len) {
  if (max_len < 0) throw MalformedInput("enumeration range must be >= 0");
  const auto words = enumerate_words(f.factor().rank(), max_len);
  const std::size_t count = words.size();
  const std::size_t n = static_cast<std::size_t>(f.n());

  // Values of the factor on single words and on every coordinate product.
  std::vector<Rational> single(count);
  std::vector<Rational> product(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    single[i] = f.factor()(words[i]);
    for (std::size_t j = 0; j < count; ++j) {
      product[i * count + j] = f.factor()(multiply(words[i], words[j]));
    }
  }
  auto integral = [&](const std::vector<std::size_t>& idx) {
    Rational s(0);
    for (int c = 0; c < f.k(); ++c) s += single[idx[static_cast<std::size_t>(c)]];
    return s;
  };
  auto integral_product = [&](const std::vector<std::size_t>& a,
                              const std::vector<std::size_t>& b) {
    Rational s(0);
    for (int c = 0; c < f.k(); ++c) {
      const auto cc = static_cast<std::size_t>(c);
      s += product[a[cc] * count + b[cc]];
    }
    return s;
  };
  auto advance = [&](std::vector<std::size_t>& idx) {
    for (std::size_t c = n; c-- > 0;) {
      if (++idx[c] < count) return true;
      idx[c] = 0;
    }
    return false;
  };

  ProductDefectCertificate cert;
  cert.range = max_len;
  Rational best(-1);
  std::vector<std::size_t> best_a(n, 0);
  std::vector<std::size_t> best_b(n, 0);
  std::vector<std::size_t> a(n, 0);
  do {
    const Rational fa = integral(a);
    std::vector<std::size_t> b(n, 0);
    do {
      Rational d = abs(fa + integral(b) - integral_product(a, b));
      if (d > best) {
        best = d;
        best_a = a;
        best_b = b;
      }
    } while (advance(b));
  } while (advance(a));
  cert.value = best;
  for (std::size_t c = 0; c < n; ++c) {
    cert.g.push_back(words[best_a[c]]);
    cert.h.push_back(words[best_b[c]]);
  }
  return cert;
}

}  // namespace autqm
