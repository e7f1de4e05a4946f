#pragma once

// Umbrella header for the evosr library.

#include "bench.hpp"
#include "cost.hpp"
#include "hybrid.hpp"
#include "io.hpp"
#include "kernels.hpp"
#include "linalg.hpp"
#include "parallel.hpp"
#include "problems.hpp"
#include "rng.hpp"
#include "spectral.hpp"
#include "tables.hpp"
#include "trace.hpp"
