#ifndef PROPWHEEL_SERIALIZE_HPP
#define PROPWHEEL_SERIALIZE_HPP

#include <string>

#include "propwheel/diagram.hpp"
#include "propwheel/ext_oracle.hpp"

namespace propwheel {

// Schema: { "q": int, "l": int, "terms": [ { "coeff": "p/q", "fibers":
// [[int]], "wheels": [[int]] } ] }. Terms are emitted in canonical basis
// order; reading accepts any valid block layout and canonicalizes it, so
// emit-then-read is the identity bit for bit.
std::string element_to_json(const Element& e);
Element element_from_json(const std::string& text);

// Graphviz digraph, one cluster per term: a vertex per corolla with its
// labelled input legs and one output leg, and a self-looped vertex per
// wheel.
std::string element_to_dot(const Element& e);

// Compact display form: fibers in parentheses, wheels in brackets, e.g.
// "(1 3)(2)[4 5]"; the empty diagram prints as "()".
std::string diagram_to_string(const WheeledDiagram& d);
std::string element_to_string(const Element& e);

// Expression in the CLI language evaluating to exactly e. Throws for a
// zero element of a biarity with no basis diagrams.
std::string element_to_expression(const Element& e);

// {"l","q","j","lambda_target","dims","checks"} with dims keyed by degree.
std::string report_to_json(const OracleReport& r);

// Triangle of dim E(q, l) for 0 <= l <= q <= max_q; the text form is the
// golden-file format.
std::string dims_table_text(int max_q);
std::string dims_table_json(int max_q);

}  // namespace propwheel

#endif
