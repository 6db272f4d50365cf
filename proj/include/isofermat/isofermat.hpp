#pragma once

#include "isofermat/fermat.hpp"
#include "isofermat/geometry.hpp"
#include "isofermat/isogonal.hpp"
#include "isofermat/oracle.hpp"
#include "isofermat/pedal.hpp"
#include "isofermat/svg.hpp"
