// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include "colortiger/assignment.hpp"
#include "colortiger/cluster.hpp"
#include "colortiger/color.hpp"
#include "colortiger/data.hpp"
#include "colortiger/error.hpp"
#include "colortiger/estimators.hpp"
#include "colortiger/evaluation.hpp"
#include "colortiger/image.hpp"
#include "colortiger/metrics.hpp"
#include "colortiger/model_io.hpp"
#include "colortiger/ppm.hpp"
#include "colortiger/random.hpp"
#include "colortiger/synth.hpp"
#include "colortiger/tiger.hpp"
