#ifndef FOCK_VERIFY_HPP
#define FOCK_VERIFY_HPP

#include <string>
#include <vector>

namespace fock {

/// One property check. `direction` says how `value` meets `threshold`:
/// AtMost for error bounds, AtLeast for counterexample searches that must
/// find a violation.
enum class Direction { AtMost, AtLeast };

struct CheckResult {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    Direction direction = Direction::AtMost;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double wall_seconds = 0.0;

    bool pass() const;
};

CheckResult make_check(std::string name, double value, double threshold,
                       Direction direction = Direction::AtMost);

/// Property suites, one per verifiable claim family. Each is deterministic
/// in `seed` and self-contained.
SuiteReport verify_oracle(unsigned long long seed);       // slot-trace oracle vs removal
SuiteReport verify_eq8(unsigned long long seed);          // fixed-N scaling law
SuiteReport verify_eq9(unsigned long long seed);          // general scaling, three forms
SuiteReport verify_eq13(unsigned long long seed);         // q = |l| uniqueness
SuiteReport verify_eq14(unsigned long long seed);         // subset-state path equivalence
SuiteReport verify_eq16(unsigned long long seed);         // correlation reconstruction
SuiteReport verify_eq17(unsigned long long seed);         // loss equivalences
SuiteReport verify_commutation(unsigned long long seed);  // network covariance + HOM
SuiteReport verify_purity(unsigned long long seed);       // applications: purity, Stokes, projector

/// Dispatch by CLI token: oracle, eq8, eq9, eq13, eq14, eq16, eq17,
/// commutation, purity (loss is accepted as an alias for eq17).
SuiteReport run_suite(const std::string& token, unsigned long long seed);

const std::vector<std::string>& suite_tokens();

std::vector<SuiteReport> verify_all(unsigned long long seed);

}  // namespace fock

#endif
