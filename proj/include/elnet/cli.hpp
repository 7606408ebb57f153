#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "elnet/rat.hpp"

namespace elnet::cli {

enum Exit : int { Ok = 0, ValidationFailure = 1, PipelineError = 2 };

// p/q with p, q uniform in [1, 1000] from a seeded mt19937_64.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}
    Rat next();
    std::vector<Rat> next(int count);

private:
    std::mt19937_64 eng_;
};

// args excludes the program name. JSON results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elnet::cli
