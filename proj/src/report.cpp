#include "onto/report.hpp"

#include <array>

#include "onto/justify.hpp"

namespace onto {
namespace {

const char* shape_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::AtomicSub: return "i";
    case WitnessKind::AtomicDisj: return "ii";
    case WitnessKind::ExistsSub: return "iii";
    case WitnessKind::ForallSub: return "iv";
    case WitnessKind::RoleSub: return "v";
  }
  return "?";
}

std::string endpoint_text(Concept c) {
  switch (c.kind()) {
    case ConceptKind::Top: return "owl:Thing";
    case ConceptKind::Bottom: return "owl:Nothing";
    default: return c.iri().canonical();
  }
}

std::string endpoint_label(Concept c, const Ontology& a, const Ontology& b) {
  if (c.kind() != ConceptKind::Atomic) return endpoint_text(c);
  if (const std::string* l = a.label(c.iri())) return *l;
  if (const std::string* l = b.label(c.iri())) return *l;
  return c.iri().canonical();
}

struct EntryView {
  std::string shape, lhs, role, rhs, lhs_label, rhs_label;
  bool equivalence;
};

EntryView view_of(const DiffEntry& e, const Ontology& o_new,
                  const Ontology& o_old) {
  EntryView v;
  v.shape = shape_name(e.shape);
  v.equivalence = e.equivalence;
  if (e.shape == WitnessKind::RoleSub) {
    v.lhs = e.role.canonical();
    v.rhs = e.rhs_role.canonical();
    v.lhs_label = v.lhs;
    v.rhs_label = v.rhs;
  } else {
    v.lhs = endpoint_text(e.lhs);
    v.rhs = endpoint_text(e.rhs);
    v.lhs_label = endpoint_label(e.lhs, o_new, o_old);
    v.rhs_label = endpoint_label(e.rhs, o_new, o_old);
    if (e.shape == WitnessKind::ExistsSub || e.shape == WitnessKind::ForallSub)
      v.role = e.role.canonical();
  }
  return v;
}

// Cross-ontology entries relate named entities from different id-spaces.
bool is_cross(const DiffEntry& e) {
  std::string_view p, q;
  if (e.shape == WitnessKind::RoleSub) {
    p = e.role.prefix();
    q = e.rhs_role.prefix();
  } else {
    if (e.lhs.kind() != ConceptKind::Atomic ||
        e.rhs.kind() != ConceptKind::Atomic)
      return false;
    p = e.lhs.iri().prefix();
    q = e.rhs.iri().prefix();
  }
  return !p.empty() && !q.empty() && p != q;
}

nlohmann::ordered_json entry_json(const DiffEntry& e, const Ontology& o_new,
                                  const Ontology& o_old) {
  EntryView v = view_of(e, o_new, o_old);
  nlohmann::ordered_json j;
  j["shape"] = v.shape;
  j["lhs"] = v.lhs;
  if (!v.role.empty()) j["role"] = v.role;
  j["rhs"] = v.rhs;
  j["equivalence"] = v.equivalence;
  j["lhs_label"] = v.lhs_label;
  j["rhs_label"] = v.rhs_label;
  j["new_in"] = e.new_in.canonical();
  j["missing_in"] = e.missing_in.canonical();
  if (!e.justifications.empty()) {
    nlohmann::ordered_json js = nlohmann::ordered_json::array();
    for (const auto& just : e.justifications) {
      nlohmann::ordered_json axs = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < just.axioms.size(); ++i) {
        nlohmann::ordered_json a;
        a["text"] = just.axioms[i].to_string();
        a["rendered"] =
            render_axiom(just.axioms[i], o_new.labels(), RenderMode::Names);
        a["source"] = just.sources[i].valid() ? just.sources[i].canonical()
                                              : o_new.id().canonical();
        axs.push_back(std::move(a));
      }
      js.push_back(nlohmann::ordered_json{{"axioms", std::move(axs)}});
    }
    j["justifications"] = std::move(js);
  }
  return j;
}

}  // namespace

nlohmann::ordered_json diff_report_json(const DiffResult& result,
                                        const Ontology& o_new,
                                        const Ontology& o_old,
                                        const Signature& scope) {
  nlohmann::ordered_json j;
  j["new"] = o_new.id().canonical();
  j["old"] = o_old.id().canonical();
  nlohmann::ordered_json sc;
  sc["concepts"] = nlohmann::ordered_json::array();
  for (auto c : scope.concepts) sc["concepts"].push_back(c.canonical());
  sc["roles"] = nlohmann::ordered_json::array();
  for (auto r : scope.roles) sc["roles"].push_back(r.canonical());
  j["scope"] = std::move(sc);

  std::array<int, 5> counts{0, 0, 0, 0, 0};
  for (const auto& e : result.entries)
    ++counts[static_cast<int>(e.shape)];
  nlohmann::ordered_json cj;
  cj["i"] = counts[0];
  cj["ii"] = counts[1];
  cj["iii"] = counts[2];
  cj["iv"] = counts[3];
  cj["v"] = counts[4];
  cj["total"] = static_cast<int>(result.entries.size());
  j["counts"] = std::move(cj);

  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : result.entries)
    j["entries"].push_back(entry_json(e, o_new, o_old));

  j["cross_ontology"] = nlohmann::ordered_json::array();
  for (const auto& e : result.entries) {
    if (is_cross(e)) j["cross_ontology"].push_back(entry_json(e, o_new, o_old));
  }

  j["unsatisfiable"] = nlohmann::ordered_json::array();
  for (auto u : result.new_unsatisfiable)
    j["unsatisfiable"].push_back(u.canonical());
  return j;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string diff_report_csv(const DiffResult& result, const Ontology& o_new,
                            const Ontology& o_old) {
  std::string out =
      "shape,lhs,role,rhs,equivalence,lhs_label,rhs_label,new_in,missing_in\n";
  for (const auto& e : result.entries) {
    EntryView v = view_of(e, o_new, o_old);
    out += v.shape;
    out += ',';
    out += csv_escape(v.lhs);
    out += ',';
    out += csv_escape(v.role);
    out += ',';
    out += csv_escape(v.rhs);
    out += ',';
    out += v.equivalence ? "true" : "false";
    out += ',';
    out += csv_escape(v.lhs_label);
    out += ',';
    out += csv_escape(v.rhs_label);
    out += ',';
    out += csv_escape(e.new_in.canonical());
    out += ',';
    out += csv_escape(e.missing_in.canonical());
    out += '\n';
  }
  return out;
}

std::string diff_report_markdown(const DiffResult& result,
                                 const Ontology& o_new, const Ontology& o_old) {
  std::string out = "# Logical difference: " + o_new.id().canonical() +
                    " vs " + o_old.id().canonical() + "\n\n";
  out += std::to_string(result.entries.size()) + " new consequence(s)\n\n";
  for (const auto& e : result.entries) {
    EntryView v = view_of(e, o_new, o_old);
    out += "- (" + v.shape + ") ";
    if (e.shape == WitnessKind::RoleSub) {
      out += v.lhs + " SubPropertyOf " + v.rhs;
    } else if (e.equivalence) {
      out += v.lhs_label + " EquivalentTo " + v.rhs_label;
    } else {
      std::string mid = " SubClassOf ";
      std::string rhs = v.rhs_label;
      if (e.shape == WitnessKind::AtomicDisj) rhs = "not " + rhs;
      if (e.shape == WitnessKind::ExistsSub) rhs = v.role + " some " + rhs;
      if (e.shape == WitnessKind::ForallSub) rhs = v.role + " only " + rhs;
      out += v.lhs_label + mid + rhs;
    }
    out += '\n';
    for (const auto& just : e.justifications) {
      out += "  - justification:\n";
      for (std::size_t i = 0; i < just.axioms.size(); ++i) {
        out += "    " + std::to_string(i + 1) + ". " +
               render_axiom(just.axioms[i], o_new.labels(), RenderMode::Names);
        if (just.sources[i].valid())
          out += " [" + just.sources[i].canonical() + "]";
        out += '\n';
      }
    }
  }
  if (!result.new_unsatisfiable.empty()) {
    out += "\n## Newly unsatisfiable\n\n";
    for (auto u : result.new_unsatisfiable) out += "- " + u.canonical() + "\n";
  }
  return out;
}

nlohmann::ordered_json classify_report_json(const Taxonomy& taxonomy,
                                            const Ontology& ontology) {
  nlohmann::ordered_json j;
  j["ontology"] = ontology.id().canonical();
  j["inconsistent"] = taxonomy.inconsistent();
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : taxonomy.nodes()) {
    nlohmann::ordered_json nj;
    nj["members"] = nlohmann::ordered_json::array();
    for (auto m : n.members) nj["members"].push_back(m.canonical());
    nj["top"] = n.is_top;
    nj["bottom"] = n.is_bottom;
    j["nodes"].push_back(std::move(nj));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [child, parent] : taxonomy.edges())
    j["edges"].push_back(nlohmann::ordered_json::array({child, parent}));
  j["unsatisfiable"] = nlohmann::ordered_json::array();
  for (auto u : taxonomy.unsatisfiable())
    j["unsatisfiable"].push_back(u.canonical());
  return j;
}

namespace {

std::string node_text(const Taxonomy::Node& n) {
  if (n.members.empty()) {
    if (n.is_top) return "owl:Thing";
    if (n.is_bottom) return "owl:Nothing";
  }
  std::string out;
  for (std::size_t i = 0; i < n.members.size(); ++i) {
    if (i) out += ';';
    out += n.members[i].canonical();
  }
  return out;
}

}  // namespace

std::string classify_report_csv(const Taxonomy& taxonomy) {
  std::string out = "child,parent\n";
  for (auto [child, parent] : taxonomy.edges()) {
    out += csv_escape(node_text(taxonomy.nodes()[child]));
    out += ',';
    out += csv_escape(node_text(taxonomy.nodes()[parent]));
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json merge_provenance_json(
    const Ontology& merged, const std::vector<std::string>& label_conflicts) {
  nlohmann::ordered_json j;
  j["ontology"] = merged.id().canonical();
  j["axioms"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < merged.axioms().size(); ++i) {
    nlohmann::ordered_json a;
    a["text"] = merged.axioms()[i].to_string();
    Iri src = merged.source(i);
    a["source"] = src.valid() ? src.canonical() : merged.id().canonical();
    j["axioms"].push_back(std::move(a));
  }
  j["label_conflicts"] = label_conflicts;
  return j;
}

}  // namespace onto
