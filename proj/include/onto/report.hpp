#pragma once

#include <string>

#include <json.hpp>

#include "onto/diff.hpp"
#include "onto/ontology.hpp"
#include "onto/taxonomy.hpp"

namespace onto {

// Report builders shared by the CLI; all output is canonically ordered so
// identical inputs produce bit-identical files.

nlohmann::ordered_json diff_report_json(const DiffResult& result,
                                        const Ontology& o_new,
                                        const Ontology& o_old,
                                        const Signature& scope);

std::string diff_report_csv(const DiffResult& result, const Ontology& o_new,
                            const Ontology& o_old);

std::string diff_report_markdown(const DiffResult& result,
                                 const Ontology& o_new, const Ontology& o_old);

nlohmann::ordered_json classify_report_json(const Taxonomy& taxonomy,
                                            const Ontology& ontology);

std::string classify_report_csv(const Taxonomy& taxonomy);

nlohmann::ordered_json merge_provenance_json(
    const Ontology& merged, const std::vector<std::string>& label_conflicts);

}  // namespace onto
