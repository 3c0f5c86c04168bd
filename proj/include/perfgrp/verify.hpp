#pragma once

#include "perfgrp/certificate.hpp"
#include "perfgrp/perm_group.hpp"

namespace perfgrp {

struct VerificationStep {
    std::size_t level = 0;
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerificationReport {
    bool valid = false;
    /// Name of the first failing step, empty when valid.
    std::string failed_step;
    std::string message;
    std::vector<VerificationStep> steps;
};

struct VerifyOptions {
    /// Re-check certificates whose version differs from this build's.
    bool force = false;
    std::uint64_t cap = kDefaultCap;
};

/// Re-checks every claim of a certificate from its witness data, using
/// only the permutation group kernel. Levels are checked bottom-up and the
/// report stops at the first failing step.
VerificationReport verify_certificate(const Certificate& cert, const VerifyOptions& options = {});

} // namespace perfgrp
