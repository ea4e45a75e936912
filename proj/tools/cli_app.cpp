#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hypo/crystal.hpp"
#include "hypo/enumeration.hpp"
#include "hypo/io.hpp"
#include "hypo/quasi_ribbon.hpp"
#include "hypo/verify.hpp"
#include "hypo/young.hpp"

namespace hypo::cli {

namespace {

using io::Json;

struct Config {
  std::optional<Symbol> n;
  std::string format = "text";
  bool brute = false;
  bool overlay = false;
  bool steps = false;
  std::string kind;
  std::string relation = "hypo";
  std::vector<std::string> words;
  std::string shape;
  std::string document;
  std::vector<int> ids;
};

class Mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Symbol alphabet(const Config& cfg, std::initializer_list<Word> words) {
  if (cfg.n) return *cfg.n;
  Symbol n = 1;
  for (const auto& w : words) n = std::max(n, w.max_symbol());
  return n;
}

void require_text_or_json(const Config& cfg) {
  if (cfg.format == "dot") throw std::invalid_argument("--format dot only applies to `component`");
}

bool plactic_kind(const std::string& kind) {
  if (kind == "plactic" || kind == "plac") return true;
  if (kind == "hypoplactic" || kind == "hypo" || kind.empty()) return false;
  throw std::invalid_argument("unknown insertion kind '" + kind + "' (expected plactic or hypoplactic)");
}

void cmd_insert(const Config& cfg, std::ostream& out) {
  require_text_or_json(cfg);
  const auto w = Word::parse(cfg.words.at(0));
  const bool plac = plactic_kind(cfg.kind);
  Json steps = Json::array();
  std::ostringstream text;
  for (std::size_t k = 0; cfg.steps && k <= w.size(); ++k) {
    const auto prefix = w.factor(0, k);
    if (plac) {
      const auto [p, q] = rsk(prefix);
      steps.push_back({{"tableau", io::to_json(p)}, {"recording", io::to_json(q)}});
      text << "step " << k << ":\n" << io::render(p) << io::render(q);
    } else {
      const auto [t, r] = hypo_rsk(prefix);
      steps.push_back({{"tableau", io::to_json(t)}, {"recording", io::to_json(r)}});
      text << "step " << k << ":\n" << io::render(t) << io::render(r);
    }
  }
  Json doc = {{"kind", plac ? "plactic" : "hypoplactic"}, {"word", w.to_string()}};
  if (plac) {
    const auto [p, q] = rsk(w);
    doc["tableau"] = io::to_json(p);
    doc["recording"] = io::to_json(q);
    text << "P:\n" << io::render(p) << "Q:\n" << io::render(q);
  } else {
    const auto [t, r] = hypo_rsk(w);
    doc["tableau"] = io::to_json(t);
    doc["recording"] = io::to_json(r);
    text << "QRT:\n" << io::render(t) << "R:\n" << io::render(r);
  }
  if (cfg.steps) doc["steps"] = std::move(steps);
  if (cfg.format == "json") out << doc.dump() << "\n";
  else out << text.str();
}

Json read_document(const std::string& source) {
  std::string text = source;
  if (!source.empty() && source.front() != '{') {
    std::ifstream in(source);
    if (!in) throw std::invalid_argument("cannot read '" + source + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

void cmd_rsk(const Config& cfg, std::ostream& out) {
  require_text_or_json(cfg);
  const auto doc = read_document(cfg.document);
  if (!doc.is_object() || !doc.contains("tableau") || !doc.contains("recording"))
    throw std::invalid_argument("expected {\"tableau\": ..., \"recording\": ...}");
  const auto& t = doc.at("tableau");
  Word w;
  if (t.contains("shape")) {
    w = hypo_rsk_inverse(io::qrt_from_json(t), io::recording_ribbon_from_json(doc.at("recording")));
  } else {
    w = rsk_inverse(io::young_tableau_from_json(t), io::standard_tableau_from_json(doc.at("recording")));
  }
  if (cfg.format == "json") out << Json{{"word", w.to_string()}}.dump() << "\n";
  else out << w.to_string() << "\n";
}

void print_component_text(const Component& c, const std::vector<Word>* quasi_roots, bool overlay, std::ostream& out) {
  out << to_string(c.kind) << " component over A_" << c.n << "\n";
  out << "root: " << c.root << "\n";
  out << "vertices (" << c.vertices.size() << "):";
  for (const auto& v : c.vertices) out << " " << v;
  out << "\nedges (" << c.edges.size() << "):\n";
  for (const auto& e : c.edges) {
    out << "  " << e.from << " -" << e.label << "-> " << e.to;
    if (overlay && !e.quasi) out << "  (crystal only)";
    out << "\n";
  }
  if (quasi_roots) {
    out << "quasi-crystal components (" << quasi_roots->size() << "):";
    for (const auto& r : *quasi_roots) out << " " << r;
    out << "\n";
  }
}

void cmd_component(const Config& cfg, std::ostream& out) {
  const auto w = Word::parse(cfg.words.at(0));
  const auto n = alphabet(cfg, {w});
  const auto kind = cfg.overlay ? GraphKind::crystal : parse_graph_kind(cfg.kind.empty() ? "quasi" : cfg.kind);
  if (cfg.overlay && !cfg.kind.empty() && parse_graph_kind(cfg.kind) != GraphKind::crystal)
    throw std::invalid_argument("--overlay draws a crystal component; drop --kind quasi");
  std::optional<CrystalOverlay> overlay;
  Component c;
  if (cfg.overlay) {
    overlay = crystal_overlay(w, n);
    c = overlay->crystal;
  } else {
    c = explore_component(w, n, kind);
  }
  if (cfg.format == "dot") {
    out << io::to_dot(c, cfg.overlay);
  } else if (cfg.format == "json") {
    auto doc = io::to_json(c);
    if (overlay) {
      Json roots = Json::array();
      for (const auto& r : overlay->quasi_roots) roots.push_back(r.to_string());
      doc["quasi_roots"] = std::move(roots);
    }
    out << doc.dump() << "\n";
  } else {
    print_component_text(c, overlay ? &overlay->quasi_roots : nullptr, cfg.overlay, out);
  }
}

void cmd_congruent(const Config& cfg, std::ostream& out) {
  require_text_or_json(cfg);
  const auto u = Word::parse(cfg.words.at(0)), v = Word::parse(cfg.words.at(1));
  const auto n = alphabet(cfg, {u, v});
  Json doc = {{"u", u.to_string()}, {"v", v.to_string()}, {"relation", cfg.relation}};
  bool verdict = false;
  if (cfg.relation == "plac") {
    verdict = plactic_congruent(u, v);
  } else if (cfg.relation == "hypo") {
    verdict = hypo_congruent(u, v);
  } else if (cfg.relation == "sim") {
    verdict = sim_related(u, v, n);
    doc["n"] = n;
    doc["highest_weight"] = {highest_weight_word(u, n, GraphKind::quasi).to_string(),
                             highest_weight_word(v, n, GraphKind::quasi).to_string()};
  } else {
    throw std::invalid_argument("unknown relation '" + cfg.relation + "' (expected plac, hypo or sim)");
  }
  doc["congruent"] = verdict;
  if (cfg.format == "json") {
    out << doc.dump() << "\n";
    return;
  }
  out << (verdict ? "true" : "false") << "\n";
  if (doc.contains("highest_weight"))
    out << "highest-weight words: " << doc["highest_weight"][0].get<std::string>() << " "
        << doc["highest_weight"][1].get<std::string>() << "\n";
}

void cmd_highest_weight(const Config& cfg, std::ostream& out) {
  require_text_or_json(cfg);
  const auto w = Word::parse(cfg.words.at(0));
  const auto n = alphabet(cfg, {w});
  const auto kind = parse_graph_kind(cfg.kind.empty() ? "quasi" : cfg.kind);
  const auto top = highest_weight_word(w, n, kind);
  if (cfg.format == "json")
    out << Json{{"word", w.to_string()}, {"kind", to_string(kind)}, {"n", n}, {"highest_weight", top.to_string()}}.dump()
        << "\n";
  else
    out << top.to_string() << "\n";
}

void print_count(const Config& cfg, const BigInt& formula, const std::optional<BigInt>& brute, std::ostream& out) {
  if (cfg.format == "json") {
    Json doc = {{"formula", formula.str()}};
    if (brute) {
      doc["brute"] = brute->str();
      doc["agree"] = *brute == formula;
    }
    out << doc.dump() << "\n";
  } else if (brute) {
    out << "formula: " << formula << "\nbrute:   " << *brute << "\n";
  } else {
    out << formula << "\n";
  }
  if (brute && *brute != formula) throw Mismatch("formula and brute force disagree");
}

void cmd_count(const std::string& what, const Config& cfg, std::ostream& out) {
  require_text_or_json(cfg);
  if (what == "components") {
    const auto lambda = Partition::parse(cfg.shape);
    const auto n = cfg.n.value_or(static_cast<Symbol>(std::max<std::size_t>(1, lambda.length())));
    std::optional<BigInt> brute;
    if (cfg.brute) brute = count_iso_plac_components_with_qrw_brute(lambda, n);
    print_count(cfg, count_iso_plac_components_with_qrw(lambda, n), brute, out);
    return;
  }
  const auto alpha = Composition::parse(cfg.shape);
  const auto n = cfg.n.value_or(static_cast<Symbol>(std::max<std::size_t>(1, alpha.length())));
  std::optional<BigInt> brute;
  if (what == "classsize") {
    if (cfg.brute) brute = hypo_class_size_brute(alpha, n);
    print_count(cfg, hypo_class_size(alpha, n), brute, out);
  } else {
    if (cfg.brute) brute = count_qrt_brute(alpha, n);
    print_count(cfg, count_qrt(alpha, n), brute, out);
  }
}

void cmd_verify(const Config& cfg, std::ostream& out) {
  require_text_or_json(cfg);
  const auto outcomes = verify::run(cfg.ids);
  bool ok = true;
  Json doc = Json::array();
  for (const auto& o : outcomes) {
    ok = ok && o.passed;
    if (cfg.format == "json")
      doc.push_back({{"id", o.id}, {"name", o.name}, {"passed", o.passed}, {"seconds", o.seconds},
                     {"budget_seconds", o.budget_seconds}, {"detail", o.detail}});
    else
      out << verify::format(o) << "\n";
  }
  if (cfg.format == "json") out << doc.dump() << "\n";
  if (!ok) throw Mismatch("acceptance criteria failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plactic and hypoplactic insertion, crystal and quasi-crystal graphs, and counting", "hypo"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("-n", cfg.n, "Alphabet bound (default: largest symbol or number of parts of the input)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_flag("--brute", cfg.brute, "Also compute counts by exhaustive enumeration and compare");
  app.add_flag("--overlay", cfg.overlay, "Draw the crystal component with crystal-only edges dotted");

  auto* insert = app.add_subcommand("insert", "Insert a word, printing the tableau and recording tableau");
  insert->add_option("word", cfg.words, "Word, e.g. 4323 or 10,2,11")->required()->expected(1);
  insert->add_option("--kind", cfg.kind, "plactic or hypoplactic (default)");
  insert->add_flag("--steps", cfg.steps, "Show every intermediate pair");

  auto* inverse = app.add_subcommand("rsk", "Recover the word from a tableau and its recording tableau");
  inverse->add_option("document", cfg.document, "JSON text or file, as printed by `insert --format json`")->required();

  auto* component = app.add_subcommand("component", "Explore the connected component containing a word");
  component->add_option("word", cfg.words)->required()->expected(1);
  component->add_option("--kind", cfg.kind, "crystal or quasi (default)");

  auto* congruent = app.add_subcommand("congruent", "Decide whether two words are related");
  congruent->add_option("words", cfg.words)->required()->expected(2);
  congruent->add_option("--relation", cfg.relation, "plac, hypo (default) or sim");

  auto* highest = app.add_subcommand("highest-weight", "Highest-weight word of a component");
  highest->add_option("word", cfg.words)->required()->expected(1);
  highest->add_option("--kind", cfg.kind, "crystal or quasi (default)");

  auto* classsize = app.add_subcommand("classsize", "Size of the hypoplactic class of a tableau shape");
  classsize->add_option("shape", cfg.shape, "Composition, e.g. 2,1,1,2")->required();
  auto* count_qrt_cmd = app.add_subcommand("count-qrt", "Number of quasi-ribbon tableaux of a shape over A_n");
  count_qrt_cmd->add_option("shape", cfg.shape, "Composition")->required();
  auto* components = app.add_subcommand(
      "count-components", "Number of crystal components with a given tableau shape that contain quasi-ribbon words");
  components->add_option("shape", cfg.shape, "Partition, e.g. 3,1")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run acceptance criteria (all, or the given ids)");
  verify_cmd->add_option("ids", cfg.ids, "Criterion numbers 1-12");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*insert) cmd_insert(cfg, out);
    else if (*inverse) cmd_rsk(cfg, out);
    else if (*component) cmd_component(cfg, out);
    else if (*congruent) cmd_congruent(cfg, out);
    else if (*highest) cmd_highest_weight(cfg, out);
    else if (*classsize) cmd_count("classsize", cfg, out);
    else if (*count_qrt_cmd) cmd_count("qrt", cfg, out);
    else if (*components) cmd_count("components", cfg, out);
    else if (*verify_cmd) cmd_verify(cfg, out);
  } catch (const EnumerationTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return guard_violation;
  } catch (const Mismatch& e) {
    err << "error: " << e.what() << "\n";
    return oracle_mismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  return ok;
}

}  // namespace hypo::cli
