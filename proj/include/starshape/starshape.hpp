// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "starshape/error.hpp"
#include "starshape/linalg.hpp"
#include "starshape/random.hpp"
#include "starshape/parallel.hpp"
#include "starshape/quadrature.hpp"
#include "starshape/gauge.hpp"
#include "starshape/radial.hpp"
#include "starshape/direction.hpp"
#include "starshape/starshaped.hpp"
#include "starshape/matrixmodels.hpp"
#include "starshape/stats.hpp"
#include "starshape/io.hpp"
#include "starshape/verify.hpp"
