#pragma once

#include "dipolechain/energy.hpp"
#include "dipolechain/errors.hpp"
#include "dipolechain/experiments.hpp"
#include "dipolechain/gaussian.hpp"
#include "dipolechain/model.hpp"
#include "dipolechain/report.hpp"
#include "dipolechain/spectrum.hpp"
#include "dipolechain/units.hpp"

namespace dipolechain {
inline constexpr const char* kVersion = "0.3.0";
}
