#pragma once

#include <stdexcept>
#include <string>

namespace lindey {

/// Thrown when the fixed-step integrator detects a state that violates
/// physical bounds beyond tolerance (usually a step-size problem).
class IntegrationError : public std::runtime_error {
public:
    explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a scan grid is too coarse to separate divergence clusters.
class ResolutionError : public std::runtime_error {
public:
    explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a closed-form result is requested for a combination the
/// reference formulas do not cover.
class UnsupportedCaseError : public std::domain_error {
public:
    explicit UnsupportedCaseError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace lindey
