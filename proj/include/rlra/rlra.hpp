#pragma once

// Umbrella header: the full randomized low-rank approximation toolkit.

#include "rlra/core/config.hpp"
#include "rlra/core/errors.hpp"
#include "rlra/core/jacobi.hpp"
#include "rlra/core/matmul.hpp"
#include "rlra/core/matrix.hpp"
#include "rlra/core/norms.hpp"
#include "rlra/core/qr.hpp"
#include "rlra/core/rng.hpp"
#include "rlra/interp.hpp"
#include "rlra/io.hpp"
#include "rlra/qb.hpp"
#include "rlra/report.hpp"
#include "rlra/rsvd.hpp"
#include "rlra/sketch.hpp"
#include "rlra/testmat.hpp"
