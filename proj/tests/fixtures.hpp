#pragma once

// Shared representation fixtures for the test suites: thin alias onto the
// library's stock representations.

#include "noetherlab/reps.hpp"

namespace fixtures = nlab::reps;
