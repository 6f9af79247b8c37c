#pragma once

#include "dsw/segmenter.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dsw {

/// A self-contained demo scenario: two generated series plus the cost
/// function and tolerances the comparison should run with. Fixtures are
/// produced by scripted transformations of base waveforms (shift, uniform
/// compression, amplitude scaling, plateau insertion, additive noise), so
/// they are fully reproducible from the seed.
struct Fixture {
    std::string name;
    Series s1;
    Series s2;
    CostFunction cost;
    ToleranceSpec tolerance;
    int stride = 1;  ///< suggested connector thinning for the point view
};

/// Names accepted by make_fixture, in canonical order.
const std::vector<std::string>& fixture_names();

/// Build one of the named demo fixtures. The seed only affects fixtures
/// that contain noise; structural parameters are fixed.
Fixture make_fixture(const std::string& name, std::uint64_t seed = 42);

}  // namespace dsw
