// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "sigrel/folkit/formula.hpp"
#include "sigrel/folkit/interpretation.hpp"
#include "sigrel/folkit/model.hpp"
#include "sigrel/folkit/parse.hpp"
