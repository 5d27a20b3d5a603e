#pragma once

#include <string>

namespace qcomb {

// Outcome of a mechanical identity check. `detail` names the first failing
// index when pass is false.
struct VerifyReport {
    bool pass = true;
    std::string detail;

    static VerifyReport ok(std::string msg = "pass") { return {true, std::move(msg)}; }
    static VerifyReport fail(std::string msg) { return {false, std::move(msg)}; }

    explicit operator bool() const { return pass; }
};

}  // namespace qcomb
