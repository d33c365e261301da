#pragma once

#include <string>
#include <vector>

#include "lienard/types.hpp"

namespace lienard {

enum class CheckStatus { Pass, Fail, ReportOnly };

// One machine-checked relation. ReportOnly checks quantify published claims
// that do not close; their residuals are regression anchors, not failures.
struct AuditCheck {
    std::string id;
    std::string anchor;  // equation the check verifies, e.g. "Eq 18"
    double residual = 0.0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::ReportOnly;
    std::string witness;
    double wall_ms = 0.0;  // shown in the table, excluded from JSON
};

struct AuditConfig {
    Branch branch = Branch::Upper;
    Cx kappa{0.0, -1.0};  // Eq-29 exponent prefactor, default -eps = -i
    double tol_scale = 1.0;
    unsigned seed = 0;
};

struct AuditReport {
    std::vector<AuditCheck> checks;
    AuditConfig config;
    std::string version;
};

// Runs every named check in a fixed order. Exceptions inside a check are
// caught and recorded in its witness; nothing escapes.
AuditReport run_full_audit(const AuditConfig& cfg);

std::string render_report_json(const AuditReport& r);
std::string render_report_table(const AuditReport& r);

// True iff no gated check failed (ReportOnly never gates).
bool audit_passed(const AuditReport& r);

// Equation anchors some module implements; every check anchor must appear
// here (cross-referenced in tests).
const std::vector<std::string>& anchor_registry();

const char* to_string(CheckStatus s);
const char* to_string(Branch b);

} // namespace lienard
