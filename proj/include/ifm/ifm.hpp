#pragma once

// Umbrella header: exact single-photon propagation through lossy
// interferometric networks, the named interaction-free measurement protocols,
// the generalized measurement algebra, and the seeded Monte Carlo sampler.

#include "ifm/distribution.hpp"
#include "ifm/elements.hpp"
#include "ifm/errors.hpp"
#include "ifm/generalized.hpp"
#include "ifm/montecarlo.hpp"
#include "ifm/network.hpp"
#include "ifm/protocols.hpp"
#include "ifm/state.hpp"
