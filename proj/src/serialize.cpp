#include "autqm/serialize.hpp"

#include "autqm/errors.hpp"
#include "autqm/text.hpp"

namespace autqm {

namespace {

Json words_json(const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(format_word(w));
  return out;
}

std::vector<Word> words_from(const Json& j, int rank) {
  std::vector<Word> out;
  for (const auto& w : j) out.push_back(parse_word(w.get<std::string>(), rank));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw MalformedInput(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::optional<Rational> optional_rational(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return rational_from_json(j.at(key));
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return parse_rational(j.get<std::string>());
}

Json to_json(const Automorphism& phi) {
  return Json{{"rank", phi.rank()},
              {"images", words_json(phi.images())},
              {"trace", format_trace(phi)}};
}

Automorphism automorphism_from_json(const Json& j) {
  const int rank = field(j, "rank").get<int>();
  Automorphism phi = parse_automorphism(field(j, "trace").get<std::string>(), rank);
  if (j.contains("images") && words_from(j.at("images"), rank) != phi.images()) {
    throw MalformedInput("stored images disagree with the trace");
  }
  return phi;
}

Json to_json(const Quasimorphism& f) {
  Json j;
  switch (f.kind()) {
    case QmKind::Brooks:
    case QmKind::BrooksHomogeneous:
      j["kind"] = f.kind() == QmKind::Brooks ? "brooks" : "brooks_homogeneous";
      j["rank"] = f.rank();
      j["pattern"] = format_word(f.pattern());
      break;
    case QmKind::Pullback:
      j["kind"] = "pullback";
      j["rank"] = f.rank();
      j["target_rank"] = f.homomorphism().target_rank;
      j["images"] = words_json(f.homomorphism().images);
      j["of"] = to_json(f.inner());
      break;
    case QmKind::FiniteAverage: {
      j["kind"] = "finite_average";
      j["rank"] = f.rank();
      Json group = Json::array();
      for (const auto& a : f.invariance_group()) group.push_back(to_json(a));
      j["group"] = std::move(group);
      j["of"] = to_json(f.inner());
      break;
    }
    case QmKind::Linear: {
      j["kind"] = "linear";
      j["rank"] = f.rank();
      Json terms = Json::array();
      for (const auto& [c, q] : f.terms()) {
        terms.push_back(Json{{"coefficient", to_json(c)}, {"of", to_json(q)}});
      }
      j["terms"] = std::move(terms);
      break;
    }
  }
  j["defect_bound"] = f.defect_bound() ? to_json(*f.defect_bound()) : Json(nullptr);
  j["homogeneous"] = f.homogeneous();
  if (f.aut_invariant_asserted()) j["aut_invariant_asserted"] = true;
  return j;
}

Quasimorphism quasimorphism_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  const int rank = field(j, "rank").get<int>();
  const auto bound = optional_rational(j, "defect_bound");
  auto built = [&]() -> Quasimorphism {
    if (kind == "brooks" || kind == "brooks_homogeneous") {
      const Word w = parse_word(field(j, "pattern").get<std::string>(), rank);
      return kind == "brooks" ? brooks(w, bound) : brooks_homogeneous(w, bound);
    }
    if (kind == "pullback") {
      Quasimorphism inner = quasimorphism_from_json(field(j, "of"));
      const int target = field(j, "target_rank").get<int>();
      return pullback(inner, Homomorphism::from_images(
                                 rank, words_from(field(j, "images"), target)));
    }
    if (kind == "finite_average") {
      std::vector<Automorphism> group;
      for (const auto& a : field(j, "group")) group.push_back(automorphism_from_json(a));
      return finite_average(quasimorphism_from_json(field(j, "of")), group);
    }
    if (kind == "linear") {
      std::vector<std::pair<Rational, Quasimorphism>> terms;
      for (const auto& t : field(j, "terms")) {
        terms.emplace_back(rational_from_json(field(t, "coefficient")),
                           quasimorphism_from_json(field(t, "of")));
      }
      return linear_combination(rank, std::move(terms));
    }
    throw MalformedInput("unknown quasimorphism kind '" + kind + "'");
  }();
  if (built.defect_bound() != bound) {
    throw MalformedInput("stored defect bound disagrees with the rebuilt tree");
  }
  if (j.value("aut_invariant_asserted", false)) return assert_aut_invariant(built);
  return built;
}

Json to_json(const ProductQuasimorphism& f) {
  return Json{{"kind", "product_average"},
              {"k", f.k()},
              {"n", f.n()},
              {"of", to_json(f.factor())},
              {"defect_bound", f.defect_bound() ? to_json(*f.defect_bound()) : Json(nullptr)}};
}

ProductQuasimorphism product_quasimorphism_from_json(const Json& j) {
  if (field(j, "kind").get<std::string>() != "product_average") {
    throw MalformedInput("not a product average");
  }
  return ProductQuasimorphism(quasimorphism_from_json(field(j, "of")),
                              field(j, "k").get<int>(), field(j, "n").get<int>());
}

Json to_json(const DefectCertificate& c) {
  if (c.type == DefectCertificate::BoundType::DeclaredUpper) {
    return Json{{"bound_type", "declared-upper"}, {"value", to_json(c.value)}};
  }
  return Json{{"bound_type", "enumerated-lower"},
              {"value", to_json(c.value)},
              {"g", format_word(c.g)},
              {"h", format_word(c.h)},
              {"range", c.range}};
}

Json to_json(const ProductDefectCertificate& c) {
  return Json{{"bound_type", "enumerated-lower"},
              {"value", to_json(c.value)},
              {"g", words_json(c.g)},
              {"h", words_json(c.h)},
              {"range", c.range}};
}

Json to_json(const WitnessFactor& f) {
  Json j{{"value", format_word(f.value)}};
  switch (f.kind) {
    case WitnessFactor::Kind::Generator:
      j["kind"] = "generator";
      j["index"] = f.generator;
      break;
    case WitnessFactor::Kind::Autocommutator:
      j["kind"] = "autocommutator";
      j["phi"] = to_json(*f.phi);
      j["h"] = format_word(f.first);
      break;
    case WitnessFactor::Kind::Commutator:
      j["kind"] = "commutator";
      j["u"] = format_word(f.first);
      j["v"] = format_word(f.second);
      break;
  }
  return j;
}

Json to_json(const NormResult& r) {
  Json j;
  switch (r.status) {
    case NormStatus::Finite:
      j["value"] = r.value;
      break;
    case NormStatus::GreaterThanCutoff:
      j["value"] = "greater-than-cutoff(" + std::to_string(r.cutoff) + ")";
      break;
    case NormStatus::InfiniteFlagged:
      j["value"] = "infinite-flagged";
      break;
  }
  Json witness = Json::array();
  for (const auto& f : r.witness) witness.push_back(to_json(f));
  j["witness"] = std::move(witness);
  return j;
}

Json to_json(const SaclEstimate& s) {
  Json trace = Json::array();
  for (const auto& step : s.trace) {
    Json t = to_json(step.acl);
    t["n"] = step.n;
    trace.push_back(std::move(t));
  }
  return Json{{"upper", s.upper ? to_json(*s.upper) : Json(nullptr)},
              {"lower", to_json(s.lower)},
              {"restricted_lower", to_json(s.restricted_lower)},
              {"trace", std::move(trace)}};
}

}  // namespace autqm
