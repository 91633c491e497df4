#pragma once

// Spec input and report output.  Input is a single JSON document; output
// documents are schema-versioned JSON (every integer rendered as a decimal
// string, so nothing is lost at large group orders), TSV with LF endings,
// or aligned human-readable text.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polydiff/basis.hpp"
#include "polydiff/boseck.hpp"
#include "polydiff/decomp.hpp"
#include "polydiff/deform.hpp"
#include "polydiff/modrep.hpp"

namespace polydiff {

using Json = nlohmann::ordered_json;

/// A parsed spec file: the extension datum plus the optional order the file
/// suggests (the --m flag overrides it).
struct SpecDocument {
  ExtensionSpec spec;
  std::optional<unsigned long> m;
};

/// Parses a spec document.  JSON syntax errors propagate the parser's own
/// exceptions (generic failure); well-formed documents with bad content
/// throw ValidationError naming the offending key.  Integers may be given
/// as JSON numbers or as decimal strings.
SpecDocument parse_spec_document(const std::string& text);
SpecDocument parse_spec_document(const Json& doc);

/// Canonical JSON form of a spec; parse_spec_document is its exact inverse.
Json spec_to_json(const ExtensionSpec& spec);

// --------------------------------------------------------------------------
// Report documents.
// --------------------------------------------------------------------------

Json table_to_json(const ExtensionSpec& spec, const BoseckTable& t);
Json decomposition_to_json(const BoseckTable& t, const Decomposition& d);
/// Includes, per element, its computed divisor and the holomorphy verdict.
Json basis_to_json(const ExtensionSpec& spec, const BoseckTable& t,
                   const std::vector<BasisElement>& elems);
Json deform_to_json(const DeformReport& r);
Json oracle_to_json(unsigned long p, unsigned n,
                    const std::vector<OracleRow>& rows);

// --------------------------------------------------------------------------
// Text renderings.
// --------------------------------------------------------------------------

enum class OutputFormat { Json, Tsv, Pretty };

/// "json" | "tsv" | "pretty" (ValidationError otherwise).
OutputFormat parse_format(const std::string& name);

std::string render_table(const ExtensionSpec& spec, const BoseckTable& t,
                         OutputFormat f);
std::string render_decomposition(const BoseckTable& t, const Decomposition& d,
                                 OutputFormat f);
std::string render_basis(const ExtensionSpec& spec, const BoseckTable& t,
                         const std::vector<BasisElement>& elems,
                         OutputFormat f);
std::string render_deform(const DeformReport& r, OutputFormat f);
std::string render_oracle(unsigned long p, unsigned n,
                          const std::vector<OracleRow>& rows, OutputFormat f);

} // namespace polydiff
