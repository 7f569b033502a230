// Command-line front end. Every result is one JSON object per line.
//
// Exit status: 0 success, 1 a verification check failed, 2 malformed input
// or usage, 3 a search cutoff or node budget was hit.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "autqm/automorphism.hpp"
#include "autqm/errors.hpp"
#include "autqm/graphprod.hpp"
#include "autqm/norms.hpp"
#include "autqm/quasimorphism.hpp"
#include "autqm/random.hpp"
#include "autqm/serialize.hpp"
#include "autqm/text.hpp"
#include "autqm/verify.hpp"
#include "autqm/whitehead.hpp"

using namespace autqm;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitCutoff = 3;

struct Settings {
  int rank = 2;
  std::uint64_t seed = 20240607;
  long cutoff = 8;
  int samples = 100;
  AclParams acl;
  std::string output;
};

/// Config file keys mirror Settings; anything absent keeps its default.
void load_config(const std::string& path, Settings& s) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open config '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw MalformedInput("config '" + path + "': " + e.what());
  }
  s.rank = j.value("rank", s.rank);
  s.seed = j.value("seed", s.seed);
  s.cutoff = j.value("cutoff", s.cutoff);
  s.samples = j.value("samples", s.samples);
  s.output = j.value("output", s.output);
  if (j.contains("acl")) {
    const Json& a = j["acl"];
    s.acl.pool_depth = a.value("pool_depth", s.acl.pool_depth);
    s.acl.elem_len = a.value("elem_len", s.acl.elem_len);
    s.acl.k_max = a.value("k_max", s.acl.k_max);
    s.acl.level_cap = a.value("level_cap", s.acl.level_cap);
  }
}

class Emitter {
 public:
  void open(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw MalformedInput("cannot write '" + path + "'");
  }
  void operator()(const Json& record) {
    std::ostream& out = file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout;
    out << record.dump() << '\n';
  }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<Word> parse_words(const std::vector<std::string>& texts, int rank) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(parse_word(t, rank));
  return out;
}

Json words_json(const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(format_word(w));
  return out;
}

/// Where a quasimorphism comes from on the command line.
struct QmSource {
  std::string pattern;
  bool homogeneous = false;
  bool average = false;
  std::string file;

  void attach(CLI::App* app) {
    app->add_option("--pattern", pattern, "Brooks pattern word");
    app->add_flag("--homogeneous", homogeneous, "use the homogeneous Brooks count");
    app->add_flag("--average", average, "average over signed permutations of the basis");
    app->add_option("--qm", file, "serialized quasimorphism (JSON)");
  }

  Quasimorphism build(int rank) const {
    if (!file.empty()) return quasimorphism_from_json(Json::parse(read_file(file)));
    if (pattern.empty()) throw MalformedInput("give --pattern or --qm");
    const Word w = parse_word(pattern, rank);
    Quasimorphism f = homogeneous ? brooks_homogeneous(w) : brooks(w);
    if (average) f = finite_average(f, signed_permutations(rank));
    return f;
  }
};

/// Shared graph-product inputs.
struct GpSource {
  std::string graph_file;
  void attach(CLI::App* app) {
    app->add_option("--graph", graph_file, "graph file")->required();
  }
  std::shared_ptr<const VertexGraph> graph() const {
    return std::make_shared<const VertexGraph>(parse_graph(read_file(graph_file)));
  }
};

Json decomposition_json(const JoinDecomposition& d) {
  Json classes = Json::array();
  for (const auto& c : d.classes) classes.push_back(c);
  return Json{{"gamma0", d.gamma0}, {"factors", d.factors}, {"classes", classes}};
}

int norm_status(const NormResult& r) { return r.finite() ? 0 : kExitCutoff; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasimorphisms, autocommutator lengths and graph products"};
  app.require_subcommand(1);
  // Global options may follow the subcommand.
  app.fallthrough();
  Settings settings;
  std::string config_path;
  std::optional<std::uint64_t> seed_override;
  std::optional<int> rank_override;
  std::string output_override;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--seed", seed_override, "random seed (overrides the config)");
  app.add_option("--rank", rank_override, "free group rank (overrides the config)");
  app.add_option("--output", output_override, "write records to this file");

  Emitter emit;
  int status = 0;
  // Subcommands record their action; it runs once settings are final.
  std::function<void()> action;
  auto defer = [&action](CLI::App* cmd, std::function<void()> f) {
    cmd->callback([&action, f] { action = f; });
  };

  // word
  auto* word = app.add_subcommand("word", "free group words")->require_subcommand(1);
  std::vector<std::string> word_args;
  std::string word_text;
  long exponent = 0;
  for (const char* name : {"reduce", "inv", "cyc"}) {
    auto* c = word->add_subcommand(name);
    c->add_option("word", word_text)->required();
    defer(c, [&, name = std::string(name)] {
      const Word w = parse_word(word_text, settings.rank);
      Json r{{"op", "word " + name}, {"input", word_text}};
      if (name == "reduce") {
        r["value"] = format_word(w);
      } else if (name == "inv") {
        r["value"] = format_word(invert(w));
      } else {
        const auto c = cyclic_reduce(w);
        r["core"] = format_word(c.core);
        r["conjugator"] = format_word(c.conjugator);
      }
      emit(r);
    });
  }
  auto* mul = word->add_subcommand("mul");
  mul->add_option("words", word_args)->required()->expected(2, 1000);
  defer(mul, [&] {
    Word acc(settings.rank);
    for (const auto& w : parse_words(word_args, settings.rank)) acc = acc * w;
    emit({{"op", "word mul"}, {"input", word_args}, {"value", format_word(acc)}});
  });
  auto* pow = word->add_subcommand("pow");
  pow->add_option("word", word_text)->required();
  pow->add_option("k", exponent)->required();
  defer(pow, [&] {
    const Word w = parse_word(word_text, settings.rank);
    emit({{"op", "word pow"}, {"input", word_text}, {"k", exponent},
          {"value", format_word(power(w, exponent))}});
  });
  auto* conj = word->add_subcommand("conj");
  conj->add_option("words", word_args)->required()->expected(2);
  defer(conj, [&] {
    const auto ws = parse_words(word_args, settings.rank);
    emit({{"op", "word conj"}, {"input", word_args}, {"value", is_conjugate(ws[0], ws[1])}});
  });

  // auto
  auto* aut = app.add_subcommand("auto", "automorphisms of free groups")->require_subcommand(1);
  std::vector<std::string> phis;
  std::string phi_text;
  std::string target;
  int k_max = 2;
  int depth = 2;
  auto* apply_cmd = aut->add_subcommand("apply");
  apply_cmd->add_option("phi", phi_text)->required();
  apply_cmd->add_option("word", target)->required();
  defer(apply_cmd, [&] {
    const Automorphism phi = parse_automorphism(phi_text, settings.rank);
    emit({{"op", "auto apply"}, {"phi", to_json(phi)}, {"input", target},
          {"value", format_word(phi(parse_word(target, settings.rank)))}});
  });
  auto* compose_cmd = aut->add_subcommand("compose", "composite, rightmost acting first");
  compose_cmd->add_option("phi", phis)->required()->expected(2, 1000);
  defer(compose_cmd, [&] {
    Automorphism acc = Automorphism::identity(settings.rank);
    for (const auto& p : phis) acc = compose(acc, parse_automorphism(p, settings.rank));
    emit({{"op", "auto compose"}, {"input", phis}, {"value", to_json(acc)}});
  });
  auto* ad_cmd = aut->add_subcommand("ad");
  ad_cmd->add_option("word", target)->required();
  defer(ad_cmd, [&] {
    emit({{"op", "auto ad"}, {"input", target},
          {"value", to_json(ad(parse_word(target, settings.rank)))}});
  });
  auto* autocomm_cmd = aut->add_subcommand("autocomm", "[phi, g] = phi(g) g^-1");
  autocomm_cmd->add_option("phi", phi_text)->required();
  autocomm_cmd->add_option("word", target)->required();
  defer(autocomm_cmd, [&] {
    const Automorphism phi = parse_automorphism(phi_text, settings.rank);
    emit({{"op", "auto autocomm"}, {"phi", to_json(phi)}, {"input", target},
          {"value", format_word(autocommutator(phi, parse_word(target, settings.rank)))}});
  });
  auto* achiral_cmd = aut->add_subcommand("achiral", "search for phi(g^k) conjugate to g^-k");
  achiral_cmd->add_option("word", target)->required();
  achiral_cmd->add_option("--k-max", k_max);
  achiral_cmd->add_option("--depth", depth);
  defer(achiral_cmd, [&] {
    const auto r = achirality_search(parse_word(target, settings.rank), k_max, depth);
    Json rec{{"op", "auto achiral"}, {"input", target}, {"k_max", k_max}, {"depth", depth}};
    if (r) {
      rec["found"] = true;
      rec["phi"] = to_json(r->phi);
      rec["k"] = r->k;
    } else {
      rec["found"] = false;
    }
    emit(rec);
  });

  // wh
  auto* wh = app.add_subcommand("wh", "Whitehead's algorithm")->require_subcommand(1);
  auto* wh_min = wh->add_subcommand("min");
  wh_min->add_option("word", target)->required();
  defer(wh_min, [&] {
    const auto m = minimize(parse_word(target, settings.rank));
    Json trace = Json::array();
    for (const auto& step : m.trace) {
      trace.push_back({{"phi", to_json(step.phi)},
                       {"before", format_word(step.before)},
                       {"after", format_word(step.after)}});
    }
    emit({{"op", "wh min"}, {"input", target}, {"value", format_word(m.min_word)},
          {"trace", trace}});
  });
  auto* wh_prim = wh->add_subcommand("primitive");
  wh_prim->add_option("word", target)->required();
  defer(wh_prim, [&] {
    emit({{"op", "wh primitive"}, {"input", target},
          {"value", is_primitive(parse_word(target, settings.rank))}});
  });
  auto* wh_ff = wh->add_subcommand("freefactor");
  wh_ff->add_option("word", target)->required();
  defer(wh_ff, [&] {
    const Word w = parse_word(target, settings.rank);
    Json rec{{"op", "wh freefactor"}, {"input", target}, {"value", in_proper_free_factor(w)}};
    const auto level = min_orbit_level(w);
    rec["min_level"] = Json::array();
    for (const auto& c : level.words) rec["min_level"].push_back(format_word(c));
    emit(rec);
  });
  auto* wh_graph = wh->add_subcommand("graph");
  wh_graph->add_option("word", target)->required();
  defer(wh_graph, [&] {
    const auto g = whitehead_graph(parse_word(target, settings.rank));
    Json edges = Json::array();
    for (auto [x, y] : g.edges) {
      edges.push_back(Json::array({std::string(1, letter_char(x)), std::string(1, letter_char(y))}));
    }
    emit({{"op", "wh graph"}, {"input", target}, {"edges", edges}, {"connected", g.connected},
          {"has_cut_vertex", g.has_cut_vertex}});
  });

  // qm
  auto* qm = app.add_subcommand("qm", "quasimorphisms")->require_subcommand(1);
  QmSource source;
  std::vector<std::string> eval_words;
  std::string pattern;
  int range = 4;
  int k = 1;
  int n = 1;
  for (const char* name : {"brooks", "homog", "average"}) {
    auto* c = qm->add_subcommand(name);
    c->add_option("pattern", pattern)->required();
    c->add_option("words", eval_words);
    defer(c, [&, name = std::string(name)] {
      const Word w = parse_word(pattern, settings.rank);
      Quasimorphism f = name == "brooks" ? brooks(w) : brooks_homogeneous(w);
      if (name == "average") f = finite_average(f, signed_permutations(settings.rank));
      Json rec{{"op", "qm " + name}, {"qm", to_json(f)}};
      Json values = Json::array();
      for (const auto& g : eval_words) {
        values.push_back({{"word", g}, {"value", to_json(f(parse_word(g, settings.rank)))}});
      }
      rec["values"] = values;
      emit(rec);
    });
  }
  auto* defect_cmd = qm->add_subcommand("defect", "enumerated defect over words of length <= L");
  source.attach(defect_cmd);
  defect_cmd->add_option("--range", range);
  defer(defect_cmd, [&] {
    const Quasimorphism f = source.build(settings.rank);
    emit({{"op", "qm defect"}, {"qm", to_json(f)}, {"certificate", to_json(defect_enumerate(f, range))},
          {"declared", to_json(declared_defect(f))}});
  });
  auto* pavg_cmd = qm->add_subcommand("product-average", "sum of f over the first k of n coordinates");
  source.attach(pavg_cmd);
  pavg_cmd->add_option("--k", k)->required();
  pavg_cmd->add_option("--n", n)->required();
  pavg_cmd->add_option("--tuple", eval_words, "one word per coordinate");
  pavg_cmd->add_option("--range", range);
  defer(pavg_cmd, [&] {
    const auto p = product_average(source.build(settings.rank), k, n);
    Json rec{{"op", "qm product-average"}, {"qm", to_json(p)}};
    if (!eval_words.empty()) {
      rec["tuple"] = eval_words;
      rec["value"] = to_json(p(parse_words(eval_words, settings.rank)));
    } else {
      rec["certificate"] = to_json(defect_enumerate(p, range));
    }
    emit(rec);
  });
  auto* inv_cmd = qm->add_subcommand("invariance", "check f(phi(g)) = f(g) on random samples");
  source.attach(inv_cmd);
  inv_cmd->add_option("--auto", phis, "automorphisms to test (default: signed permutations)");
  inv_cmd->add_option("--max-len", range, "sample word length cap");
  defer(inv_cmd, [&] {
    const Quasimorphism f = source.build(settings.rank);
    std::vector<Automorphism> autos;
    for (const auto& p : phis) autos.push_back(parse_automorphism(p, settings.rank));
    if (autos.empty()) autos = signed_permutations(settings.rank);
    Rng rng(settings.seed);
    std::vector<Word> samples;
    for (int i = 0; i < settings.samples; ++i) {
      samples.push_back(random_word_upto(settings.rank, std::max(range, 1) * 3, rng));
    }
    const auto report = check_invariance(f, autos, samples);
    Json violations = Json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"phi", to_json(autos[v.automorphism])}, {"g", format_word(v.g)},
                            {"value", to_json(v.value)}, {"image_value", to_json(v.image_value)}});
    }
    emit({{"op", "qm invariance"}, {"qm", to_json(f)}, {"checked", report.checked},
          {"ok", report.ok()}, {"violations", violations}});
    if (!report.ok()) status = kExitVerify;
  });

  // norm
  auto* norm = app.add_subcommand("norm", "word norms and autocommutator length")
                   ->require_subcommand(1);
  std::string norm_word;
  std::vector<std::string> gens;
  bool orbit = false;
  int n_max = 8;
  int len_cap = 2;
  auto* bfs_cmd = norm->add_subcommand("bfs", "word norm over a finite generating set");
  bfs_cmd->add_option("--word", norm_word)->required();
  bfs_cmd->add_option("--gens", gens, "generating words")->required();
  bfs_cmd->add_flag("--orbit", orbit, "close the set under signed permutations");
  bfs_cmd->add_option("--cutoff", settings.cutoff, "largest norm searched");
  defer(bfs_cmd, [&] {
    std::vector<Word> s = parse_words(gens, settings.rank);
    if (orbit) s = orbit_closure(s, signed_permutations(settings.rank));
    const auto r = bfs_norm(parse_word(norm_word, settings.rank), s, settings.cutoff);
    Json rec{{"op", "norm bfs"}, {"input", norm_word}};
    rec.update(to_json(r));
    rec["generators"] = words_json(s);
    emit(rec);
    status = norm_status(r);
  });
  auto* acl_cmd = norm->add_subcommand("acl", "upper bound on autocommutator length");
  acl_cmd->add_option("--word", norm_word)->required();
  defer(acl_cmd, [&] {
    const auto r = acl_upper(parse_word(norm_word, settings.rank), settings.acl);
    Json rec{{"op", "norm acl"}, {"input", norm_word}};
    rec.update(to_json(r));
    emit(rec);
    status = norm_status(r);
  });
  auto* sacl_cmd = norm->add_subcommand("sacl", "stable autocommutator length estimate");
  sacl_cmd->add_option("--word", norm_word)->required();
  sacl_cmd->add_option("--n-max", n_max);
  source.attach(sacl_cmd);
  defer(sacl_cmd, [&] {
    std::vector<Quasimorphism> family;
    if (!source.pattern.empty() || !source.file.empty()) family.push_back(source.build(settings.rank));
    Json rec{{"op", "norm sacl"}, {"input", norm_word}};
    rec.update(to_json(sacl_estimate(parse_word(norm_word, settings.rank), n_max, settings.acl, family)));
    emit(rec);
  });
  auto* cl_cmd = norm->add_subcommand("cl", "upper bound on commutator length");
  cl_cmd->add_option("--word", norm_word)->required();
  cl_cmd->add_option("--len-cap", len_cap);
  cl_cmd->add_option("--k-max", k_max);
  defer(cl_cmd, [&] {
    const auto r = cl_upper(parse_word(norm_word, settings.rank), len_cap, k_max, settings.acl.level_cap);
    Json rec{{"op", "norm cl"}, {"input", norm_word}};
    rec.update(to_json(r));
    emit(rec);
    status = norm_status(r);
  });
  auto* b32_cmd = norm->add_subcommand("bound32", "|f(g)| / (sup_S |f| + D)");
  b32_cmd->add_option("--word", norm_word)->required();
  b32_cmd->add_option("--gens", gens)->required();
  QmSource b32_source;
  b32_source.attach(b32_cmd);
  defer(b32_cmd, [&] {
    const Quasimorphism f = b32_source.build(settings.rank);
    const auto s = parse_words(gens, settings.rank);
    emit({{"op", "norm bound32"}, {"input", norm_word}, {"generators", gens}, {"qm", to_json(f)},
          {"value", to_json(prop32_bound(f, s, parse_word(norm_word, settings.rank)))}});
  });
  auto* bavard_cmd = norm->add_subcommand("bavard", "|f(g)| / 2D");
  bavard_cmd->add_option("--word", norm_word)->required();
  QmSource bavard_source;
  bavard_source.attach(bavard_cmd);
  defer(bavard_cmd, [&] {
    const Quasimorphism f = bavard_source.build(settings.rank);
    emit({{"op", "norm bavard"}, {"input", norm_word}, {"qm", to_json(f)},
          {"aut_invariant", f.aut_invariant_asserted()},
          {"value", to_json(bavard_bound(f, parse_word(norm_word, settings.rank)))}});
  });

  // gp
  auto* gp = app.add_subcommand("gp", "graph products of cyclic groups")->require_subcommand(1);
  GpSource gsrc;
  std::vector<std::string> gp_words;
  std::vector<int> factor;
  auto* nf_cmd = gp->add_subcommand("nf");
  gsrc.attach(nf_cmd);
  nf_cmd->add_option("--word", gp_words, "syllables such as '0^2 1^-1'")->required()->expected(1);
  defer(nf_cmd, [&] {
    const auto g = gsrc.graph();
    emit({{"op", "gp nf"}, {"graph", format_graph(*g)}, {"input", gp_words[0]},
          {"value", format_gpword(normal_form(g, parse_syllables(gp_words[0])))}});
  });
  auto* gmul_cmd = gp->add_subcommand("mul");
  gsrc.attach(gmul_cmd);
  gmul_cmd->add_option("--word", gp_words)->required()->expected(1, 1000);
  defer(gmul_cmd, [&] {
    const auto g = gsrc.graph();
    GPWord acc = gp_identity(g);
    for (const auto& w : gp_words) acc = gp_multiply(acc, normal_form(g, parse_syllables(w)));
    emit({{"op", "gp mul"}, {"input", gp_words}, {"value", format_gpword(acc)}});
  });
  auto* join_cmd = gp->add_subcommand("join");
  gsrc.attach(join_cmd);
  defer(join_cmd, [&] {
    const auto g = gsrc.graph();
    Json rec{{"op", "gp join"}, {"graph", format_graph(*g)}};
    rec.update(decomposition_json(join_decompose(g)));
    emit(rec);
  });
  auto* dinf_cmd = gp->add_subcommand("dinfty");
  gsrc.attach(dinf_cmd);
  dinf_cmd->add_option("--factor", factor, "vertex set")->required();
  defer(dinf_cmd, [&] {
    const auto g = gsrc.graph();
    emit({{"op", "gp dinfty"}, {"factor", factor}, {"value", is_dinfty(*g, factor)}});
  });
  auto* cls_cmd = gp->add_subcommand("classify", "virtually abelian or not");
  gsrc.attach(cls_cmd);
  defer(cls_cmd, [&] {
    const auto g = gsrc.graph();
    emit({{"op", "gp classify"}, {"graph", format_graph(*g)},
          {"virtually_abelian", classify_virtually_abelian(*g)}});
  });
  auto* proj_cmd = gp->add_subcommand("project", "image in the product of the factors");
  gsrc.attach(proj_cmd);
  proj_cmd->add_option("--word", gp_words)->required()->expected(1);
  defer(proj_cmd, [&] {
    const auto g = gsrc.graph();
    const auto d = join_decompose(g);
    Json parts = Json::array();
    for (const auto& p : project_kill_h0(normal_form(g, parse_syllables(gp_words[0])), d)) {
      parts.push_back(format_gpword(p));
    }
    emit({{"op", "gp project"}, {"input", gp_words[0]}, {"factors", d.factors}, {"value", parts}});
  });
  auto* pipe_cmd = gp->add_subcommand("pipeline", "evaluate the averaged quasimorphism");
  gsrc.attach(pipe_cmd);
  QmSource pipe_source;
  pipe_source.attach(pipe_cmd);
  pipe_cmd->add_option("--k", k)->required();
  pipe_cmd->add_option("--word", gp_words)->required()->expected(1, 1000);
  defer(pipe_cmd, [&] {
    const auto g = gsrc.graph();
    const auto d = join_decompose(g);
    const int factor_rank = d.factors.empty() ? 1 : static_cast<int>(d.factors.front().size());
    const auto q = gp_pipeline_qm(d, pipe_source.build(factor_rank), k);
    Json values = Json::array();
    for (const auto& w : gp_words) {
      values.push_back({{"word", w}, {"value", to_json(q(normal_form(g, parse_syllables(w))))}});
    }
    emit({{"op", "gp pipeline"}, {"decomposition", decomposition_json(d)}, {"qm", to_json(q.factor_qm())},
          {"k", k}, {"vanishing", q.vanishing_factor()},
          {"defect_bound", q.defect_bound() ? to_json(*q.defect_bound()) : Json(nullptr)},
          {"values", values}});
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  std::string suite = "all";
  verify->add_option("suite,--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  defer(verify, [&] {
    VerifyConfig config;
    config.seed = settings.seed;
    for (const auto& r : run_suite(suite, config)) {
      emit({{"op", "verify"}, {"suite", suite}, {"check", r.id}, {"name", r.name},
            {"passed", r.passed}, {"correct", r.correct}, {"seconds", r.seconds},
            {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
      if (!r.passed) status = kExitVerify;
    }
  });

  try {
    app.parse(argc, argv);
    if (!config_path.empty()) load_config(config_path, settings);
    if (seed_override) settings.seed = *seed_override;
    if (rank_override) settings.rank = *rank_override;
    if (!output_override.empty()) settings.output = output_override;
    emit.open(settings.output);
    if (action) action();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  } catch (const CutoffExceeded& e) {
    std::cerr << "cutoff: " << e.what() << '\n';
    return kExitCutoff;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return status;
}
