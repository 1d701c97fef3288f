#pragma once

#include "logint/constant_expr.hpp"
#include "logint/oracle.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logint::catalog {

class UnknownEntryError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

using ParamMap = std::map<std::string, double>;

struct Param {
    std::string name;
    double default_value;
    std::string domain;  // shown by the CLI, e.g. "a > 0", "integer n >= 0"
};

struct CatalogEntry {
    std::string id;
    std::string description;
    std::vector<Param> params;

    // closed form at the entry's default parameters, exact over the atom set
    ConstantExpr closed_form;
    // closed form at arbitrary parameters; agrees with closed_form.to_float()
    // at the defaults
    std::function<double(const ParamMap&)> closed_fn;
    // the independent numeric route (quadrature, or a reference evaluation
    // for the formula-check entries)
    std::function<oracle::QuadratureResult(const ParamMap&, double tol)> numeric_fn;

    // set only for erratum entries: the value as printed, at the defaults
    std::optional<ConstantExpr> printed_value;
    std::optional<std::string> erratum_note;

    ParamMap defaults() const;
};

const std::vector<CatalogEntry>& entries();  // natural-sorted by id
const CatalogEntry& lookup(const std::string& id);

struct VerifyReport {
    std::string id;
    double closed = 0.0;
    oracle::QuadratureResult numeric;
    double abs_diff = 0.0;
    bool pass = false;
    bool erratum_flag = false;
    std::optional<double> printed;       // printed closed form, when it differs
    std::optional<double> printed_diff;  // |printed - numeric|
    std::string note;                    // failure reason or erratum note
};

VerifyReport verify_entry(const std::string& id, const ParamMap& params, double tol);
VerifyReport verify_entry(const std::string& id, double tol);  // defaults

struct VerifySummary {
    int n_pass = 0;
    int n_fail = 0;
    int n_errata = 0;
    std::vector<VerifyReport> reports;  // in registry order
};

VerifySummary verify_all(double tol);

// Full registry as JSON with stable key order:
// {"entries":[{"id","description","params":[{"name","default"}],
//   "closed_form":{"atoms":{name:[num,den]}},"printed_differs","erratum"}]}
std::string export_json();

}  // namespace logint::catalog
