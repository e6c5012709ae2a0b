#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsg {

// Default tolerances. Every predicate and solver takes an override; these are
// the values the CLI and the file formats assume.
inline constexpr double kPredicateTol = 1e-9;
inline constexpr double kLpTol = 1e-8;
inline constexpr double kSdpTol = 1e-4;

struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& guard)
        : std::runtime_error("guard exceeded: " + guard), guard_name(guard) {}
    std::string guard_name;
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error("shape mismatch: " + what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), achieved(residual) {}
    double achieved;
};

/// Outcome of a membership predicate: the verdict plus the worst violation
/// magnitude and a human-readable location of the offending index.
struct ValidationReport {
    bool ok = true;
    double worst = 0.0;
    std::string where;

    void note(double violation, const std::string& at) {
        if (violation > worst) {
            worst = violation;
            where = at;
        }
    }
    void finish(double tol) { ok = worst <= tol; }
    explicit operator bool() const { return ok; }
};

// Row-major pairing used everywhere: (i,j) over sizes (p,q) maps to i*q + j.
inline int pair_index(int i, int j, int q) { return i * q + j; }
inline std::pair<int, int> unpair_index(int k, int q) { return {k / q, k % q}; }

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ShapeError(msg);
}

}  // namespace nsg
