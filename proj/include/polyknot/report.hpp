#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polyknot/verify.hpp"

namespace polyknot {

/// A command report: input echo plus one record per executed check. The
/// machine-readable stream (one JSON object per line) excludes the runtime so
/// that fixed-seed runs are byte-stable.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<CheckResult> checks;
    double runtime_seconds = 0.0;

    bool pass() const;
    void add(const CheckResult& c) { checks.push_back(c); }

    void write_text(std::ostream& os) const;
    void write_records(std::ostream& os) const;  // JSON lines
};

/// Ledger of the first-page columns of the discriminant spectral sequence for
/// the space of degree-4 maps: what the theory establishes and which machine
/// scans of the underlying geometry passed in this run. The homological
/// statements themselves are analytic results; the scans support, but do not
/// re-prove, them.
struct ColumnLedgerEntry {
    std::string column;      // e.g. "E1^{-1,*}"
    std::string conclusion;  // analytic content
    std::vector<std::string> supporting;  // check ids that must pass
    bool supported = false;
};

struct ColumnLedger {
    int n = 3;
    std::vector<ColumnLedgerEntry> entries;
    bool all_supported() const;
    void write_text(std::ostream& os) const;
};

/// Runs the (scaled) supporting scans and assembles the ledger for n
/// components.
ColumnLedger build_column_ledger(int n, const VerifyParams& params, Report& report);

}  // namespace polyknot
