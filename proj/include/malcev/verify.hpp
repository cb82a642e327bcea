#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace malcev {

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    int cases = 0;
    int passed = 0;
    int failed = 0;
    std::string first_failure;

    bool ok() const { return failed == 0; }
};

struct VerifyOptions {
    std::uint64_t seed = 20240101;
    int cases = 100;      // iterations of the randomized loop
    int hp_generators = 2;
    int hp_class = 3;
};

const std::vector<std::string>& verify_suite_names();

// Runs one of: ring, eg-axioms, bch, collect, hall-petresco, functor,
// solver, lyndon. Throws ParseError for an unknown name. Each suite is
// deterministic in (seed, options).
VerifyReport run_verify_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace malcev
