#ifndef CHARKUMMER_CHARKUMMER_HPP
#define CHARKUMMER_CHARKUMMER_HPP

// umbrella header: exact computer algebra for quotients by wild involutions
// in characteristic 2 and the attendant surface-singularity bookkeeping

#include "charkummer/field.hpp"
#include "charkummer/series.hpp"
#include "charkummer/polyuni.hpp"
#include "charkummer/localring.hpp"
#include "charkummer/involution.hpp"
#include "charkummer/blowup.hpp"
#include "charkummer/lattice.hpp"
#include "charkummer/rdp.hpp"
#include "charkummer/serre.hpp"
#include "charkummer/kummer.hpp"
#include "charkummer/records.hpp"
#include "charkummer/verify.hpp"

#endif
