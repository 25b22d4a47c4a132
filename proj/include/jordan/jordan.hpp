#ifndef JORDAN_JORDAN_HPP
#define JORDAN_JORDAN_HPP

//! @file
//! Umbrella header.

#include "jordan/affine_symplectic.hpp"
#include "jordan/claim.hpp"
#include "jordan/degree_bounds.hpp"
#include "jordan/exact_arith.hpp"
#include "jordan/group_data.hpp"
#include "jordan/mpr.hpp"
#include "jordan/property_bounds.hpp"
#include "jordan/verifier.hpp"

#endif // JORDAN_JORDAN_HPP
