#include "polyknot/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace polyknot {

bool Report::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::write_text(std::ostream& os) const {
    os << "== " << command;
    for (const auto& [k, v] : inputs) os << " " << k << "=" << v;
    os << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "  [pass] " : "  [FAIL] ") << c.id;
        os << "  margin=" << std::setprecision(6) << c.margin;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    os << "-- " << (pass() ? "all checks passed" : "CHECK FAILURES PRESENT") << " in "
       << std::setprecision(3) << runtime_seconds << " s\n";
}

void Report::write_records(std::ostream& os) const {
    for (const auto& c : checks) {
        nlohmann::json rec;
        rec["command"] = command;
        nlohmann::json in = nlohmann::json::object();
        for (const auto& [k, v] : inputs) in[k] = v;
        rec["inputs"] = in;
        rec["id"] = c.id;
        rec["margin"] = c.margin;
        rec["verdict"] = c.pass ? "pass" : "fail";
        if (!c.detail.empty()) rec["detail"] = c.detail;
        os << rec.dump() << "\n";
    }
}

bool ColumnLedger::all_supported() const {
    for (const auto& e : entries)
        if (!e.supported) return false;
    return true;
}

void ColumnLedger::write_text(std::ostream& os) const {
    os << "Spectral-sequence column ledger (n = " << n << ", degree 4)\n";
    os << "The column conclusions are analytic results; the scans verify the\n"
          "geometric facts they rest on (machine-supported, not machine-proved).\n\n";
    for (const auto& e : entries) {
        os << "  " << e.column << "  " << (e.supported ? "[supported]  " : "[UNSUPPORTED]") << "  "
           << e.conclusion << "\n";
        for (const auto& s : e.supporting) os << "      scan: " << s << "\n";
    }
}

ColumnLedger build_column_ledger(int n, const VerifyParams& params, Report& report) {
    ColumnLedger ledger;
    ledger.n = n;

    auto run = [&](SuiteResult (*fn)(const VerifyParams&)) {
        SuiteResult r = fn(params);
        for (const auto& c : r.checks) report.add(c);
        return r.pass();
    };

    bool linking_ok = run(suite_linking);
    bool region_ok = run(suite_bezout_bound) && run(suite_infinite_characterization);
    bool fiber_ok = run(suite_fiber_agreement);
    bool cells_ok = run(suite_cell_lines);

    {
        ColumnLedgerEntry e;
        e.column = "E1^{-1,*}";
        std::ostringstream c;
        c << "free cyclic in dimension q = n-1 = " << (n - 1)
          << "; generator dual to the singular/equal-a1 stratum";
        e.conclusion = c.str();
        e.supporting = {"linking.cycles.orbit_loop", "linking.cycles.orbit_sphere",
                        "linking.cycles.crossings"};
        e.supported = linking_ok;
        ledger.entries.push_back(e);
    }
    {
        ColumnLedgerEntry e;
        e.column = "E1^{-2,*}";
        e.conclusion = "trivial: the three-condition region and the reducible pencils carry no closed homology";
        e.supporting = {"bound.count.range", "infinite.pencils.characterized", "fibers.agreement.grid"};
        e.supported = region_ok && fiber_ok;
        ledger.entries.push_back(e);
    }
    {
        ColumnLedgerEntry e;
        e.column = "E1^{-3,*}";
        e.conclusion = "trivial: per-cell line structures (empty / two components / half-open / three components)";
        e.supporting = {"celllines.structure.one_critical", "celllines.structure.three_critical",
                        "celllines.structure.even_pencil", "celllines.structure.symmetric"};
        e.supported = cells_ok;
        ledger.entries.push_back(e);
    }
    return ledger;
}

}  // namespace polyknot
