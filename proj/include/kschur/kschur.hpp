#pragma once

#include "kschur/shapes.hpp"
#include "kschur/polyring.hpp"
#include "kschur/tableaux.hpp"
#include "kschur/enumeration.hpp"
#include "kschur/genfunc.hpp"
#include "kschur/involutions.hpp"
#include "kschur/serialize.hpp"
#include "kschur/sweep.hpp"
