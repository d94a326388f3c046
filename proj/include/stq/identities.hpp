#ifndef STQ_IDENTITIES_HPP
#define STQ_IDENTITIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace stq {

/// Options for running a registered check.
struct CheckContext {
    /// Truncation order; 0 means "use the check's default order".
    int order = 0;
    /// Seed for the randomized specializations some checks draw.
    unsigned long long seed = 20260826ULL;
    /// Testing hook: inject a spurious +q^k term into the first comparison
    /// the check performs, which must flip it to a failure.
    std::optional<int> fault_exponent;
};

/// Structured result of one check.
struct IdentityReport {
    std::string name;
    /// Order actually verified (the weakest guaranteed order among the
    /// comparisons performed).
    int order = 0;
    bool passed = false;
    /// First exponent where the two sides disagreed, when failed.
    std::optional<int> first_bad_exponent;
    /// Human-readable note: the discrepancy value, the seed used, or which
    /// variant of an ambiguous statement held.
    std::string detail;
};

/// A named, order-parameterized identity check.
struct IdentityCheck {
    std::string name;
    std::string description;
    int default_order;
    std::function<IdentityReport(const CheckContext &)> run;
};

/// The full registry, in stable order.
const std::vector<IdentityCheck> &identity_checks();

/// Lookup by name; nullptr when not registered.
const IdentityCheck *find_check(const std::string &name);

/// Run one check by name. Throws std::invalid_argument for unknown names.
IdentityReport run_check(const std::string &name, const CheckContext &ctx = {});

/// Run every registered check, in registry order.
std::vector<IdentityReport> run_all_checks(const CheckContext &ctx = {});

} // namespace stq

#endif
