// SPDX-License-Identifier: Apache-2.0
// The interpretations between SpecRel and signalling theory.
#pragma once

#include "sigrel/interp/semantics.hpp"
#include "sigrel/interp/specs.hpp"
