#pragma once

#include "orbconf/algebra.hpp"
#include "orbconf/element.hpp"
#include "orbconf/error.hpp"
#include "orbconf/expression.hpp"
#include "orbconf/group_action.hpp"
#include "orbconf/hypersurface.hpp"
#include "orbconf/json_io.hpp"
#include "orbconf/oracle.hpp"
#include "orbconf/presentation.hpp"
#include "orbconf/scalar.hpp"
#include "orbconf/series.hpp"
