#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "gdesc/descent.hpp"
#include "gdesc/descent_data.hpp"
#include "gdesc/group.hpp"
#include "gdesc/groupoid.hpp"
#include "gdesc/weak_action.hpp"

namespace gdesc {

/// Raised on malformed documents: bad JSON, wrong kind, unknown fields,
/// out-of-range indices. Maps to the structural exit code in the CLI.
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One entity per document; the kind tag picks the alternative. Groupoid
/// documents may carry an optional provenance table (written by descend).
struct Document {
  std::string kind;
  std::variant<FiniteGroupoid, FiniteGroup, WeakAction, GaloisDescentDatum,
               CoverDescentDatum, DescentMorphism>
      value;
  // provenance rows of a descended groupoid: (carrier object, family)
  std::vector<std::pair<int, std::vector<int>>> provenance;
};

/// Canonical serialization: sorted keys, two-space indent, sorted
/// composition triples; parse . serialize is the identity on documents and
/// serialize . parse the identity on canonical text.
std::string serialize(const Document& doc);
Document parse_document(const std::string& text);

Document wrap(FiniteGroupoid g);
Document wrap(FiniteGroup g);
Document wrap(WeakAction w);
Document wrap(GaloisDescentDatum d);
Document wrap(CoverDescentDatum d);
Document wrap(DescentMorphism m);
Document wrap_descended(const DescendedGroupoid& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace gdesc
