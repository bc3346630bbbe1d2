#include "bohrlab/record.hpp"

#include <utility>

namespace bohrlab {

VerificationRecord make_record(std::string name, double lhs, double rhs, double tolerance) {
    VerificationRecord r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tolerance;
    r.passed = lhs <= rhs + tolerance;
    return r;
}

} // namespace bohrlab
