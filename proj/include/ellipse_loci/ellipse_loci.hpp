// Copyright 2026 The ellipse-loci Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ellipse_loci/conic.hpp"
#include "ellipse_loci/core.hpp"
#include "ellipse_loci/curve.hpp"
#include "ellipse_loci/envelopes.hpp"
#include "ellipse_loci/error.hpp"
#include "ellipse_loci/focal.hpp"
#include "ellipse_loci/lines.hpp"
#include "ellipse_loci/locus.hpp"
#include "ellipse_loci/oracle.hpp"
#include "ellipse_loci/tolerances.hpp"
#include "ellipse_loci/triangle_centers.hpp"
#include "ellipse_loci/verify.hpp"
