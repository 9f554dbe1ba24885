#include "fdlb/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "fdlb/decision.hpp"
#include "fdlb/kb_text.hpp"
#include "fdlb/reasoner.hpp"
#include "fdlb/report.hpp"

namespace fdlb::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string kb_path;
  std::vector<std::string> ubox_paths;
  std::vector<std::string> choices;
  bool all_individuals = false;
  bool strict_complete = false;
  std::string format = "text";
  std::string individual;
  std::string concept_text;

  bool structured() const { return format == "structured"; }
};

/// Thrown to leave a command early with an exit code; the message goes to err.
struct Exit {
  int code;
};

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": error: cannot read file\n";
    throw Exit{UsageError};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename T>
T require_parsed(const text::ParseResult<T>& result, const std::string& path, std::ostream& err) {
  for (const auto& d : result.diagnostics) err << path << ":" << d.str() << '\n';
  if (!result.ok()) throw Exit{UsageError};
  return *result.value;
}

KnowledgeBase load_kb(const RunConfig& cfg, std::ostream& err) {
  return require_parsed(text::parse_kb(read_file(cfg.kb_path, err)), cfg.kb_path, err);
}

std::vector<UtilityBox> load_uboxes(const RunConfig& cfg, std::ostream& err) {
  std::vector<UtilityBox> boxes;
  for (const auto& path : cfg.ubox_paths)
    boxes.push_back(require_parsed(text::parse_ubox(read_file(path, err)), path, err));
  return boxes;
}

/// Individuals that never occur as the object of an abstract role assertion:
/// the things being chosen between rather than their parts.
std::vector<std::string> default_choices(const KnowledgeBase& kb) {
  std::set<std::string> objects;
  for (const auto& ra : kb.role_assertions()) objects.insert(ra.object);
  std::vector<std::string> out;
  for (const auto& a : kb.individuals())
    if (!objects.count(a)) out.push_back(a);
  return out;
}

std::vector<std::string> resolve_choices(const RunConfig& cfg, const KnowledgeBase& kb, std::ostream& err) {
  std::vector<std::string> choices;
  if (!cfg.choices.empty()) {
    choices = cfg.choices;
  } else if (cfg.all_individuals) {
    choices.assign(kb.individuals().begin(), kb.individuals().end());
  } else {
    choices = default_choices(kb);
  }
  for (const auto& c : choices) {
    if (!kb.has_individual(c)) {
      err << "error: unknown individual '" << c << "'\n";
      throw Exit{UsageError};
    }
  }
  if (choices.empty()) {
    err << "error: the choice set is empty\n";
    throw Exit{UsageError};
  }
  return choices;
}

json document(const RunConfig& cfg, bool consistent) { return {{"kb", cfg.kb_path}, {"consistent", consistent}}; }

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

/// Saturates; on inconsistency prints the conflict report and exits with 2.
reasoning::SaturatedKb saturate_or_exit(const RunConfig& cfg, const KnowledgeBase& kb, std::ostream& out) {
  auto result = reasoning::saturate(kb);
  if (auto* sat = std::get_if<reasoning::SaturatedKb>(&result)) return std::move(*sat);
  const auto& report = std::get<reasoning::ConsistencyReport>(result);
  if (cfg.structured()) {
    json doc = document(cfg, false);
    doc["conflicts"] = report::conflicts_json(report);
    emit(out, doc);
  } else {
    out << report::render_consistency(report);
  }
  throw Exit{Inconsistent};
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  KnowledgeBase kb = load_kb(cfg, err);
  saturate_or_exit(cfg, kb, out);
  if (cfg.structured()) {
    json doc = document(cfg, true);
    doc["conflicts"] = json::array();
    emit(out, doc);
  } else {
    out << "consistent\n";
  }
  return Ok;
}

int cmd_rank(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  KnowledgeBase kb = load_kb(cfg, err);
  auto boxes = load_uboxes(cfg, err);
  auto choices = resolve_choices(cfg, kb, err);
  for (const auto& box : boxes) decision::check_attributes(kb, box);
  auto sat = saturate_or_exit(cfg, kb, out);

  if (cfg.strict_complete) {
    bool complete = true;
    json experts = json::array();
    std::string text;
    for (const auto& box : boxes) {
      auto pairs = decision::completeness_report({sat, choices, box});
      complete = complete && pairs.empty();
      text += report::render_undecided(box.expert, pairs);
      json undecided = json::array();
      for (const auto& p : pairs) undecided.push_back({{"choice", p.first}, {"attribute", p.second}});
      experts.push_back({{"id", box.expert}, {"undecided", undecided}});
    }
    if (!complete) {
      if (cfg.structured()) {
        json doc = document(cfg, true);
        doc["experts"] = experts;
        emit(out, doc);
      } else {
        out << "refusing to rank an incomplete decision base\n" << text;
      }
      return Incomplete;
    }
  }

  json experts = json::array();
  std::string text;
  for (const auto& box : boxes) {
    auto report = decision::rank({sat, choices, box});
    if (!text.empty()) text += '\n';
    text += report::render_decision(report);
    experts.push_back(report::decision_json(report));
  }
  if (cfg.structured()) {
    json doc = document(cfg, true);
    doc["experts"] = experts;
    emit(out, doc);
  } else {
    out << text;
  }
  return Ok;
}

int cmd_complete(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  KnowledgeBase kb = load_kb(cfg, err);
  auto boxes = load_uboxes(cfg, err);
  auto choices = resolve_choices(cfg, kb, err);
  for (const auto& box : boxes) decision::check_attributes(kb, box);
  auto sat = saturate_or_exit(cfg, kb, out);

  bool complete = true;
  json experts = json::array();
  std::string text;
  for (const auto& box : boxes) {
    auto pairs = decision::completeness_report({sat, choices, box});
    complete = complete && pairs.empty();
    text += report::render_undecided(box.expert, pairs);
    json undecided = json::array();
    for (const auto& p : pairs) undecided.push_back({{"choice", p.first}, {"attribute", p.second}});
    experts.push_back({{"id", box.expert}, {"complete", pairs.empty()}, {"undecided", undecided}});
  }
  if (cfg.structured()) {
    json doc = document(cfg, true);
    doc["experts"] = experts;
    emit(out, doc);
  } else {
    out << text << (complete ? "complete\n" : "incomplete\n");
  }
  return complete ? Ok : Incomplete;
}

int cmd_explain(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  KnowledgeBase kb = load_kb(cfg, err);
  if (!kb.has_individual(cfg.individual)) {
    err << "error: unknown individual '" << cfg.individual << "'\n";
    return UsageError;
  }
  Concept c = require_parsed(text::parse_concept(cfg.concept_text, kb), "--concept", err);
  auto sat = saturate_or_exit(cfg, kb, out);
  reasoning::Explanation e;
  try {
    e = reasoning::explain(sat, cfg.individual, c);
  } catch (const fdlb::NoDerivation& ex) {
    err << "error: " << ex.what() << '\n';
    return NoDerivation;
  }
  if (cfg.structured()) {
    json doc = document(cfg, true);
    doc["explanation"] = report::explanation_json(e);
    emit(out, doc);
  } else {
    out << report::render_explanation(e);
  }
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Fuzzy description logic reasoner and decision ranking", "fdlb"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("kb", cfg.kb_path, "knowledge base file")->required();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->default_str("text");
  };
  auto add_decision = [&](CLI::App* sub) {
    sub->add_option("--ubox", cfg.ubox_paths, "utility box file (repeatable)")->required();
    auto* choices = sub->add_option("--choices", cfg.choices, "comma-separated choice individuals")->delimiter(',');
    sub->add_flag("--all-individuals", cfg.all_individuals, "use every individual as a choice")->excludes(choices);
  };

  auto* check = app.add_subcommand("check", "check consistency");
  add_common(check);

  auto* rank = app.add_subcommand("rank", "rank choices per expert");
  add_common(rank);
  add_decision(rank);
  rank->add_flag("--strict-complete", cfg.strict_complete, "refuse to rank an incomplete decision base");

  auto* complete = app.add_subcommand("complete", "report undecided (choice, attribute) pairs");
  add_common(complete);
  add_decision(complete);

  auto* explain = app.add_subcommand("explain", "derivation trees for one membership");
  add_common(explain);
  explain->add_option("--individual", cfg.individual, "individual name")->required();
  explain->add_option("--concept", cfg.concept_text, "concept expression")->required();

  std::vector<const char*> argv{"fdlb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return Ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return UsageError;
  }

  try {
    if (check->parsed()) return cmd_check(cfg, out, err);
    if (rank->parsed()) return cmd_rank(cfg, out, err);
    if (complete->parsed()) return cmd_complete(cfg, out, err);
    return cmd_explain(cfg, out, err);
  } catch (const Exit& e) {
    return e.code;
  } catch (const fdlb::Error& e) {
    err << "error: " << e.what() << '\n';
    return UsageError;
  }
}

}  // namespace fdlb::cli
