#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zetasum/arith.hpp"
#include "zetasum/config.hpp"
#include "zetasum/estimate.hpp"

namespace zetasum {

// One evaluation point of an identity: any subset of (x, s, k) applies.
struct ParamPoint {
    std::optional<double> x;
    std::optional<Cplx> s;
    std::optional<int> k;

    std::string label() const;
};

struct Sample {
    ParamPoint point;
    double lhs = 0, rhs = 0;
    double residual = 0;
    double lhs_tail = 0, rhs_tail = 0;
};

struct CheckReport {
    std::string id;
    std::vector<Sample> samples;
    bool passed = false;
    std::vector<std::string> notes;
    double tol_abs = 0, tol_rel = 0;
};

// Shared evaluation state for the catalog.
class IdentityContext {
  public:
    explicit IdentityContext(CliConfig cfg = {}, uint64_t sieve_max = 2000000);
    const ArithTable& table() const { return *table_; }
    const CliConfig& config() const { return cfg_; }
    uint64_t ramanujan_terms() const { return ram_terms_; }
    void set_ramanujan_terms(uint64_t n) { ram_terms_ = n; }

  private:
    CliConfig cfg_;
    std::shared_ptr<const ArithTable> table_;
    uint64_t ram_terms_ = 100000;
};

struct IdentityEntry {
    std::string id;
    std::string description;
    std::string paper_ref;  // source equation tag
    std::vector<ParamPoint> domain;
    double tol_abs = 1e-10;
    double tol_rel = 0.0;
    // evaluators return value + truncation bound
    std::function<Estimate(const IdentityContext&, const ParamPoint&)> lhs;
    std::function<Estimate(const IdentityContext&, const ParamPoint&)> rhs;
    std::vector<std::string> static_notes;  // known anomalies, attached to reports
};

// Raised when an override violates an entry's hypotheses (configuration
// error, distinct from a failed check).
struct HypothesisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::vector<IdentityEntry>& catalog();
const IdentityEntry& find_entry(const std::string& id);

struct VerifyOverrides {
    std::vector<ParamPoint> domain;  // when nonempty, replaces the entry domain
    std::optional<double> tol_abs;
    std::optional<double> tol_rel;
};

CheckReport verify(const IdentityContext& ctx, const std::string& id,
                   const VerifyOverrides& ov = {});

// Deterministic (id-ordered) run over entries matching a '*' glob; empty
// filter runs everything.
std::vector<CheckReport> run_suite(const IdentityContext& ctx, const std::string& filter = "");

bool glob_match(const std::string& pattern, const std::string& text);

// JSON document for a suite run (stable key order, 17-digit floats).
std::string reports_to_json(const std::vector<CheckReport>& reports, bool with_timestamps);

}  // namespace zetasum
