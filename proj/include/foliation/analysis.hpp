#ifndef FOLIATION_ANALYSIS_HPP
#define FOLIATION_ANALYSIS_HPP

#include "foliation/blowup.hpp"

#include <string>
#include <vector>

namespace foliation {

struct CsEntry {
    int point = 0;
    FieldElem index; // CS index along the component, in the point's field
    FieldElem trace; // summed over the conjugates of the point, in the component's field
};

struct CsComponentReport {
    int component = 0;
    bool skipped = false; // dicritical
    std::vector<CsEntry> entries;
    FieldElem sum;
    int self_intersection = 0;
    bool pass = false;
};

struct CsReport {
    std::vector<CsComponentReport> components;
    bool pass = true;
};

CsReport cs_check(const ReductionTree& tree);

struct DeadBranch {
    std::vector<int> chain;  // extremity first, attaching link last
    int extremity = 0;
    int attaching = 0;        // the last link, carrying the attachment point
    int attachment_point = -1;
    int attached_to = -1;     // component across the attachment point when it is a corner
};

struct BranchReport {
    std::vector<DeadBranch> branches;
    std::vector<int> initial_components;
    std::vector<std::string> notes;
};

// Singular points on component c counted with multiplicity.
int singularity_count(const ReductionTree& tree, int c);

BranchReport detect_dead_branches(const ReductionTree& tree);
// Fills report.initial_components from report.branches.
void detect_initial_components(const ReductionTree& tree, BranchReport& report);
BranchReport analyze_branches(const ReductionTree& tree);

struct SeparatrixWitness {
    int point = 0;
    int component = 0;
    std::string role; // "strong" or "weak"
};

struct PresentabilityVerdict {
    bool strongly_presentable = true;
    std::vector<SeparatrixWitness> witnesses;
    std::vector<int> corner_saddle_nodes;
    std::vector<int> violations; // saddle-node point indices
};

PresentabilityVerdict strongly_presentable(const ReductionTree& tree);

struct AuditCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AuditReport {
    bool applicable = false; // strongly presentable input
    bool pass = false;
    std::vector<AuditCheck> checks;
    std::vector<std::string> notes;
};

AuditReport initial_component_audit(const ReductionTree& tree);

} // namespace foliation

#endif
