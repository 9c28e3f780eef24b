#pragma once

#include "radbound/bounds.hpp"
#include "radbound/coupling.hpp"
#include "radbound/errors.hpp"
#include "radbound/family_spec.hpp"
#include "radbound/functionals.hpp"
#include "radbound/halo.hpp"
#include "radbound/io.hpp"
#include "radbound/potential.hpp"
#include "radbound/reference_tables.hpp"
#include "radbound/reproduce.hpp"
#include "radbound/shape_scan.hpp"
#include "radbound/spectrum.hpp"
#include "radbound/units.hpp"
