#ifndef Q8TC_CERTIFY_HPP
#define Q8TC_CERTIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "q8tc/bar.hpp"
#include "q8tc/borel.hpp"
#include "q8tc/cochain.hpp"
#include "q8tc/gf2.hpp"
#include "q8tc/group.hpp"

namespace q8tc {

/// eq2: delta u' = c' (degrees 4 -> 5). eq1: delta u = c (degrees 5 -> 6).
enum class Equation { eq1, eq2 };

std::string to_string(Equation e);
Equation parse_equation(const std::string& s);
std::string to_string(EliminationOrder o);
EliminationOrder parse_elimination(const std::string& s);

struct Scenario {
    Variant variant = Variant::reduced;
    int skeleton = 4;
    Equation equation = Equation::eq2;
    std::string cochain;  // empty: cprime for eq2, c for eq1
    EliminationOptions elimination{EliminationOrder::reference, 1};
    std::size_t memory_budget = std::size_t{1} << 30;

    int lower_degree() const { return equation == Equation::eq2 ? 4 : 5; }
    int upper_degree() const { return lower_degree() + 1; }
    std::string cochain_name() const;
    /// "eq2-on-p4", "eq2-on-p5", "eq1-direct", or "eqN-on-pT" otherwise.
    std::string kind() const;
};

Scenario eq2_on_p4(Variant variant = Variant::reduced);
Scenario eq2_on_p5(Variant variant = Variant::reduced);
Scenario eq1_direct(Variant variant = Variant::reduced);

/// Bytes the scenario's elimination needs (coefficient matrix plus its
/// augmented working copy).
std::size_t estimated_bytes(const GroupTable& group, const Scenario& s);

struct Timings {
    double enumerate = 0;
    double assemble = 0;
    double solve = 0;
    double verify = 0;
    double total = 0;

    bool operator==(const Timings&) const = default;
};

struct CertificationReport {
    std::string group = "builtin:q8";
    std::string kind;
    Variant variant = Variant::reduced;
    int skeleton = 0;
    Equation equation = Equation::eq2;
    std::string cochain;
    EliminationOrder elimination = EliminationOrder::reference;

    int lower_degree = 0;
    int upper_degree = 0;
    std::size_t lower_cells = 0;
    std::size_t upper_cells = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank_coefficient = 0;
    std::size_t rank_augmented = 0;
    bool solvable = false;
    /// Solvable: A x = b re-checked and delta u = rhs re-checked by coboundary
    /// application. Unsolvable: both ranks reproduced by the other elimination order.
    bool verified = false;
    std::vector<std::size_t> solution_support;
    std::vector<std::string> solution_labels;
    std::vector<std::string> interpretation;
    std::string digest;

    Timings timings;
    std::size_t peak_memory_bytes = 0;

    bool operator==(const CertificationReport&) const = default;
};

/// Enumerates bases, assembles the coboundary system, solves, verifies and
/// interprets. Throws ResourceError when the estimate exceeds the budget and
/// ConsistencyError when verification fails.
CertificationReport run_scenario(const GroupTable& group, const Scenario& s,
                                 const std::string& group_label = "builtin:q8");

/// run_scenario for an eq1 scenario; throws std::invalid_argument otherwise.
CertificationReport run_direct(const GroupTable& group, const Scenario& s,
                               const std::string& group_label = "builtin:q8");

/// FNV-1a 64 over the deterministic content of the report, as 16 hex digits.
std::string report_digest(const CertificationReport& r);

struct RenderOptions {
    bool solution = false;  // list the support cells
    bool timings = true;
};

std::string render_text(const CertificationReport& r, const RenderOptions& options = {});
nlohmann::json to_json(const CertificationReport& r, bool timings = true);
CertificationReport report_from_json(const nlohmann::json& doc);

struct VerifyResult {
    bool ok = false;
    std::vector<std::string> problems;
};

/// Rebuilds the system named by a certificate and re-checks counts, ranks,
/// the solution and the digest.
VerifyResult verify_certificate(const GroupTable& group, const CertificationReport& cert,
                                const EliminationOptions& elimination = {});

/// Whether `first` - `second` is a coboundary on the scenario's bases.
struct CohomologyCheck {
    std::string first;
    std::string second;
    std::size_t rank_coefficient = 0;
    std::size_t rank_augmented = 0;
    bool cohomologous = false;
    std::size_t differing_cells = 0;
};

CohomologyCheck compare_cochains(const GroupTable& group, const Scenario& s, const std::string& first,
                                 const std::string& second);

/// delta(v cup u') on the dim-6 basis of the 5-skeleton, for u' the support of
/// an eq2-on-p4 solution, compared with c and with v cup c'.
struct CrossScenarioCheck {
    std::size_t cells = 0;
    std::size_t coboundary_weight = 0;
    std::size_t mismatches_c = 0;
    std::size_t mismatches_v_cup_cprime = 0;
};

CrossScenarioCheck cross_scenario_check(const GroupTable& group, Variant variant,
                                        const std::vector<std::size_t>& eq2_support);

/// Peak resident set size of this process, 0 where unavailable.
std::size_t peak_memory_bytes();

}  // namespace q8tc

#endif
