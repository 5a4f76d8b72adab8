#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypx/report.hpp"
#include "hypx/scalar.hpp"

namespace hypx {

/// Deterministic generator for the randomized suites (splitmix64).
/// Rational samples have numerator in [-9,9]\{0} and denominator in [1,9].
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational9() {
        int num = uniform(1, 9) * (uniform(0, 1) ? 1 : -1);
        return Rational(num, uniform(1, 9));
    }
};

struct SuiteOptions {
    unsigned k_max = 3;
    unsigned cases = 20;
    unsigned order = 16;
    std::uint64_t seed = 42;
    unsigned precision_bits = 256;
};

/// One randomized pass/fail run of a registry transform at nonsingular
/// sampled parameters (resampled on singularity).
VerificationReport run_random_transform(const std::string& name, unsigned k, unsigned order,
                                        Rng& rng);

std::vector<VerificationReport> run_transform_suite(const SuiteOptions& opt);
std::vector<VerificationReport> run_summation_suite(const SuiteOptions& opt);
std::vector<VerificationReport> run_pairing_suite(const SuiteOptions& opt);
/// Series-level raising relation and the underlying double-summation lemma
/// at random liftings and parameter arrays.
std::vector<VerificationReport> run_mechanism_suite(const SuiteOptions& opt);
std::vector<VerificationReport> run_kummer_suite(unsigned precision_bits);
std::vector<VerificationReport> run_specialization_suite(const SuiteOptions& opt);
/// Deterministic structural checks of the polynomial families: direct
/// representation vs raising recurrence, lowering, degree laws, displayed
/// low-order forms, lattice symmetry, limits, generating function.
std::vector<VerificationReport> run_polynomial_checks(const SuiteOptions& opt);
/// Mutated identities must fail with an early first mismatch.
std::vector<VerificationReport> run_negative_controls(const SuiteOptions& opt);

/// Everything above in one battery (the `suite` CLI command).
std::vector<VerificationReport> run_full_suite(const SuiteOptions& opt);

struct RunConfig {
    std::string command;  // qpoly | roots | series | verify-transform | verify-summation | suite
    std::string name;     // identity or family name
    std::string series_json;  // structured series description (series command)
    unsigned k = 0;
    std::map<std::string, std::string> params;  // exact rational strings
    unsigned order = 16;
    unsigned precision_bits = 256;
    std::uint64_t seed = 42;
    std::string format = "text";  // text | json
    unsigned cases = 20;
    unsigned k_max = 3;
    std::string variant = "i";
    std::optional<std::string> mutate;  // testing aid; forces a broken instance
    int size_n = 0;                     // summation N
    int size_m = 0;                     // summation m
};

/// Executes one command; returns the process exit status:
/// 0 all passed, 1 verification failure, 2 invalid input, 3 internal error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hypx
