// Copyright 2026 The supersinglet-distill Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file validation.hpp
 * @brief Self-check suites run by `distill validate`.
 */

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace supersinglet {

enum class Suite { algebra, channels, engine, all };

[[nodiscard]] std::optional<Suite> parse_suite(std::string_view text);

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    /// Measured quantity against its bound, e.g. "residual 3.1e-15 < 1e-12".
    std::string detail;
};

/// Runs the suite; `progress` (if set) sees each result as it finishes.
std::vector<CheckResult> run_validation(Suite suite,
                                        const std::function<void(const CheckResult&)>& progress = {});

}  // namespace supersinglet
