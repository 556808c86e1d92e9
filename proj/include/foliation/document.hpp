#ifndef FOLIATION_DOCUMENT_HPP
#define FOLIATION_DOCUMENT_HPP

#include "foliation/analysis.hpp"
#include "foliation/numerics.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace foliation {

// A reduction tree together with every combinatorial analysis of it.
struct TreeAnalysis {
    ReductionTree tree;
    CsReport cs;
    BranchReport branches;
    PresentabilityVerdict presentability;
    AuditReport audit;
};

TreeAnalysis analyze_tree(ReductionTree tree);

// Exact serializations: rationals as "p/q" strings, field elements as coefficient vectors over the
// field generator together with its minimal polynomial.
nlohmann::json rational_json(const Rational& q);
nlohmann::json field_json(const FieldPtr& f);
nlohmann::json element_json(const FieldElem& e);
nlohmann::json class_json(const SingClass& c);

// TreeDocument: keys are sorted and arrays follow component ids and point indices.
nlohmann::json tree_document(const TreeAnalysis& a);

// Dual graph: one node per component labeled with its self-intersection, one edge per corner;
// dicritical components are drawn as boxes and the singular points are listed in the labels.
std::string tree_dot(const TreeAnalysis& a);

// Columns t, Re x, Im x, Re y, Im y.
std::string samples_csv(const std::vector<LiftSample>& samples);

} // namespace foliation

#endif
