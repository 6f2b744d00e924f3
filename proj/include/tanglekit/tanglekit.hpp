#pragma once

#include "asymptotics.hpp"
#include "bijections.hpp"
#include "counting.hpp"
#include "diagram.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "recurrence.hpp"
#include "render.hpp"
#include "series.hpp"
#include "tableau.hpp"
