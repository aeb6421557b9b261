// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "analysis.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "indices.hpp"
#include "io.hpp"
#include "matrix_functions.hpp"
#include "signed_log.hpp"
#include "special.hpp"
#include "spectral.hpp"
#include "weights.hpp"
