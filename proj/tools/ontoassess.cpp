// ontoassess: assess the logical consequences of integrating an ontology
// with external domain ontologies. Subcommands cover the whole pipeline:
// validate inputs, extract locality-based modules, merge with normalized
// identifiers, classify, and compute the approximated logical difference
// with explanations.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "onto/diff.hpp"
#include "onto/errors.hpp"
#include "onto/integrate.hpp"
#include "onto/locality.hpp"
#include "onto/parsing.hpp"
#include "onto/report.hpp"

namespace fs = std::filesystem;
using namespace onto;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitReasoning = 2;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_diagnostics(const std::string& path,
                       const std::vector<ParseDiagnostic>& diags) {
  for (const auto& d : diags) {
    std::cerr << path << ':' << d.line << ": "
              << (d.severity == Severity::Error ? "error" : "warning") << ": "
              << d.message << '\n';
  }
}

std::optional<Ontology> load_ontology(const std::string& path) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << path << ": cannot read file\n";
    return std::nullopt;
  }
  ParseResult result = fs::path(path).extension() == ".obo"
                           ? parse_obo(*text)
                           : parse_ofn(*text);
  print_diagnostics(path, result.diagnostics);
  if (!result.ok()) return std::nullopt;

  // Functional syntax carries no provenance; a sidecar written by `merge`
  // restores per-axiom sources for explanations.
  auto sidecar = read_file(path + ".provenance.json");
  if (sidecar) {
    auto parsed = nlohmann::json::parse(*sidecar, nullptr, false);
    if (!parsed.is_discarded() && parsed.contains("axioms")) {
      std::map<std::string, std::string> by_text;
      for (const auto& a : parsed["axioms"]) {
        if (a.contains("text") && a.contains("source"))
          by_text[a["text"].get<std::string>()] = a["source"].get<std::string>();
      }
      Ontology& onto = *result.ontology;
      for (std::size_t i = 0; i < onto.axioms().size(); ++i) {
        auto it = by_text.find(onto.axioms()[i].to_string());
        if (it != by_text.end()) onto.set_source(i, Iri::of(it->second));
      }
    }
  }
  return std::move(result.ontology);
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << path << ": cannot write file\n";
    return false;
  }
  out << content;
  return out.good();
}

int cmd_validate(const std::vector<std::string>& inputs) {
  std::vector<std::string> files;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(in)) {
        auto ext = entry.path().extension();
        if (ext == ".obo" || ext == ".ofn" || ext == ".owl")
          found.push_back(entry.path().string());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(in);
    }
  }
  bool ok = true;
  for (const auto& path : files) {
    auto text = read_file(path);
    if (!text) {
      std::cerr << path << ": cannot read file\n";
      ok = false;
      continue;
    }
    ParseResult result = fs::path(path).extension() == ".obo"
                             ? parse_obo(*text)
                             : parse_ofn(*text);
    print_diagnostics(path, result.diagnostics);
    if (result.ok()) {
      std::size_t warnings = result.diagnostics.size();
      std::cout << path << ": ok (" << result.ontology->size() << " axioms, "
                << warnings << " warnings)\n";
    } else {
      std::cout << path << ": FAILED\n";
      ok = false;
    }
  }
  return ok ? kExitOk : kExitInput;
}

int cmd_extract_module(const std::string& input, const std::string& sig_path,
                       const std::string& locality, const std::string& out) {
  auto onto = load_ontology(input);
  if (!onto) return kExitInput;
  auto sig_text = read_file(sig_path);
  if (!sig_text) {
    std::cerr << sig_path << ": cannot read file\n";
    return kExitInput;
  }
  std::vector<ParseDiagnostic> diags;
  Signature seed = parse_signature_file(*sig_text, diags);
  print_diagnostics(sig_path, diags);
  if (std::any_of(diags.begin(), diags.end(), [](const ParseDiagnostic& d) {
        return d.severity == Severity::Error;
      }))
    return kExitInput;

  Signature osig = signature_of(*onto);
  std::vector<std::string> missing;
  for (auto c : seed.concepts)
    if (!osig.contains_concept(c)) missing.push_back(c.canonical());
  for (auto r : seed.roles)
    if (!osig.contains_role(r)) missing.push_back(r.canonical() + " (role)");
  if (!missing.empty()) {
    std::cerr << "warning: seed entities not found in " << input << ":";
    for (const auto& m : missing) std::cerr << ' ' << m;
    std::cerr << '\n';
  }

  LocalityKind kind = LocalityKind::Bottom;
  if (locality == "top") kind = LocalityKind::Top;
  else if (locality == "star") kind = LocalityKind::Star;
  else if (locality != "bottom") {
    std::cerr << "unknown locality kind '" << locality << "'\n";
    return kExitInput;
  }

  Ontology module = extract_module(*onto, seed, kind);
  Signature msig = signature_of(module);
  std::cerr << "module: " << module.size() << " axioms, "
            << msig.concepts.size() << " concepts, " << msig.roles.size()
            << " roles (from " << onto->size() << " axioms)\n";
  return write_output(out, serialize_ofn(module)) ? kExitOk : kExitInput;
}

int cmd_merge(const std::vector<std::string>& inputs,
              const std::string& rules_path, const std::string& out,
              const std::string& id) {
  std::vector<RewriteRule> rules;
  if (!rules_path.empty()) {
    auto text = read_file(rules_path);
    if (!text) {
      std::cerr << rules_path << ": cannot read file\n";
      return kExitInput;
    }
    std::vector<ParseDiagnostic> diags;
    rules = parse_rules_file(*text, diags);
    print_diagnostics(rules_path, diags);
    if (std::any_of(diags.begin(), diags.end(), [](const ParseDiagnostic& d) {
          return d.severity == Severity::Error;
        }))
      return kExitInput;
  }

  std::vector<Ontology> ontologies;
  for (const auto& path : inputs) {
    auto onto = load_ontology(path);
    if (!onto) return kExitInput;
    try {
      ontologies.push_back(normalize_iris(*onto, rules));
    } catch (const RuleCollisionError& e) {
      std::cerr << path << ": " << e.what() << '\n';
      return kExitInput;
    }
  }

  MergeResult merged = merge(ontologies);
  if (!id.empty()) merged.merged.set_id(Iri::of(id));
  for (const auto& w : merged.label_conflicts)
    std::cerr << "warning: label conflict: " << w << '\n';

  if (!write_output(out, serialize_ofn(merged.merged))) return kExitInput;
  if (!out.empty() && out != "-") {
    auto prov = merge_provenance_json(merged.merged, merged.label_conflicts);
    if (!write_output(out + ".provenance.json", prov.dump(2) + "\n"))
      return kExitInput;
  }
  return kExitOk;
}

int cmd_classify(const std::string& input, const std::string& format,
                 const std::string& out, int threads) {
  auto onto = load_ontology(input);
  if (!onto) return kExitInput;
  try {
    ReasonerOptions opts;
    opts.threads = threads;
    auto start = std::chrono::steady_clock::now();
    Taxonomy taxonomy = Reasoner(*onto, opts).classify();
    auto elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cerr << "classified " << input << " in " << elapsed << "s\n";
    if (taxonomy.inconsistent())
      std::cerr << "warning: ontology is inconsistent\n";
    std::string content =
        format == "csv" ? classify_report_csv(taxonomy)
                        : classify_report_json(taxonomy, *onto).dump(2) + "\n";
    return write_output(out, content) ? kExitOk : kExitInput;
  } catch (const FragmentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitReasoning;
  }
}

int cmd_diff(const std::string& new_path, const std::string& old_path,
             const std::string& scope_spec, const std::string& scope_base,
             const std::string& shapes_spec, int max_justifications,
             bool include_unsat, const std::string& format,
             const std::string& out) {
  auto o_new = load_ontology(new_path);
  if (!o_new) return kExitInput;
  auto o_old = load_ontology(old_path);
  if (!o_old) return kExitInput;

  auto shapes = ShapeSet::parse(shapes_spec);
  if (!shapes) {
    std::cerr << "unknown --shapes value '" << shapes_spec << "'\n";
    return kExitInput;
  }

  Signature sig_new = signature_of(*o_new);
  Signature sig_old = signature_of(*o_old);
  Signature base = scope_base == "union"
                       ? Signature::union_of(sig_new, sig_old)
                       : Signature::intersection(sig_new, sig_old);

  Signature scope;
  // roles always come from both inputs: witnesses of shapes iii-v use the
  // integrated vocabulary
  scope.roles = Signature::union_of(sig_new, sig_old).roles;
  if (scope_spec.empty() || scope_spec == "*") {
    scope.concepts = base.concepts;
  } else if (scope_spec.front() == '@') {
    auto text = read_file(scope_spec.substr(1));
    if (!text) {
      std::cerr << scope_spec.substr(1) << ": cannot read file\n";
      return kExitInput;
    }
    std::vector<ParseDiagnostic> diags;
    Signature listed = parse_signature_file(*text, diags);
    print_diagnostics(scope_spec.substr(1), diags);
    if (std::any_of(diags.begin(), diags.end(), [](const ParseDiagnostic& d) {
          return d.severity == Severity::Error;
        }))
      return kExitInput;
    scope.concepts = listed.concepts;
    if (!listed.roles.empty()) scope.roles = listed.roles;
  } else {
    // comma-separated prefix filter over the base signature
    std::vector<std::string> prefixes;
    std::stringstream ss{scope_spec};
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) prefixes.push_back(item);
    }
    for (auto c : base.concepts) {
      for (const auto& p : prefixes) {
        if (c.prefix() == p) {
          scope.concepts.insert(c);
          break;
        }
      }
    }
  }
  if (scope.concepts.empty())
    std::cerr << "warning: empty concept scope\n";

  DiffOptions opts;
  opts.shapes = *shapes;
  opts.include_unsatisfiable = include_unsat;
  opts.max_justifications = max_justifications;

  try {
    DiffResult result = logical_diff(*o_new, *o_old, scope, opts);
    std::string content;
    if (format == "csv") {
      content = diff_report_csv(result, *o_new, *o_old);
    } else if (format == "md") {
      content = diff_report_markdown(result, *o_new, *o_old);
    } else {
      content = diff_report_json(result, *o_new, *o_old, scope).dump(2) + "\n";
    }
    return write_output(out, content) ? kExitOk : kExitInput;
  } catch (const FragmentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitReasoning;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ontology integration assessment toolkit"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "parse files, report diagnostics");
  std::vector<std::string> validate_inputs;
  validate->add_option("files", validate_inputs, "ontology files or directories")
      ->required();

  auto* extract = app.add_subcommand(
      "extract-module", "extract a locality-based module for a seed signature");
  std::string ex_input, ex_sig, ex_locality = "bottom", ex_out;
  extract->add_option("ontology", ex_input, "input ontology")->required();
  extract->add_option("--sig", ex_sig, "seed signature file")->required();
  extract->add_option("--locality", ex_locality, "bottom|top|star");
  extract->add_option("-o,--output", ex_out, "output file (default stdout)");

  auto* mergecmd =
      app.add_subcommand("merge", "normalize identifiers and merge ontologies");
  std::vector<std::string> merge_inputs;
  std::string merge_rules, merge_out, merge_id;
  mergecmd->add_option("files", merge_inputs, "ontologies to merge")->required();
  mergecmd->add_option("--rules", merge_rules, "identifier rewrite rules file");
  mergecmd->add_option("-o,--output", merge_out, "output file (default stdout)");
  mergecmd->add_option("--id", merge_id, "id for the merged ontology");

  auto* classifycmd = app.add_subcommand("classify", "compute the taxonomy");
  std::string cl_input, cl_format = "json", cl_out;
  int cl_threads = 1;
  classifycmd->add_option("ontology", cl_input, "input ontology")->required();
  classifycmd->add_option("--format", cl_format, "json|csv");
  classifycmd->add_option("-o,--output", cl_out, "output file (default stdout)");
  classifycmd->add_option("--threads", cl_threads, "worker thread cap");

  auto* diffcmd = app.add_subcommand(
      "diff", "approximated logical difference between two ontologies");
  std::string d_new, d_old, d_scope, d_scope_base = "intersection",
                            d_shapes = "i", d_format = "json", d_out;
  int d_maxjust = 0;
  bool d_include_unsat = false;
  diffcmd->add_option("new", d_new, "ontology holding the new consequences")
      ->required();
  diffcmd->add_option("old", d_old, "reference ontology")->required();
  diffcmd->add_option("--scope", d_scope,
                      "prefix list (e.g. HP or GO,FMA), @file, or *");
  diffcmd->add_option("--scope-base", d_scope_base,
                      "intersection|union of the two signatures");
  diffcmd->add_option("--shapes", d_shapes, "witness shapes, e.g. i,iii or all");
  diffcmd->add_option("--max-justifications", d_maxjust,
                      "justifications per entry");
  diffcmd->add_flag("--include-unsat", d_include_unsat,
                    "keep unsatisfiable concepts in the enumeration");
  diffcmd->add_option("--format", d_format, "json|csv|md");
  diffcmd->add_option("-o,--output", d_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(validate_inputs);
    if (extract->parsed())
      return cmd_extract_module(ex_input, ex_sig, ex_locality, ex_out);
    if (mergecmd->parsed())
      return cmd_merge(merge_inputs, merge_rules, merge_out, merge_id);
    if (classifycmd->parsed())
      return cmd_classify(cl_input, cl_format, cl_out, cl_threads);
    if (diffcmd->parsed())
      return cmd_diff(d_new, d_old, d_scope, d_scope_base, d_shapes, d_maxjust,
                      d_include_unsat, d_format, d_out);
  } catch (const FragmentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitReasoning;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
