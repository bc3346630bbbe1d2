#pragma once

#include <map>
#include <string>

namespace bohrlab {

/// One verified inequality lhs <= rhs (+ tolerance), with its margin kept
/// for reporting.
struct VerificationRecord {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    bool extra_ok = true; // side conditions beyond lhs <= rhs + tolerance
    std::map<std::string, std::string> metadata;

    double margin() const { return rhs - lhs; }

    void apply_tolerance(double tol) {
        tolerance = tol;
        passed = (lhs <= rhs + tolerance) && extra_ok;
    }
};

VerificationRecord make_record(std::string name, double lhs, double rhs, double tolerance);

} // namespace bohrlab
