#pragma once

// Umbrella header for the whole toolkit.

#include "cherednik/character.hpp"
#include "cherednik/embedding.hpp"
#include "cherednik/kostka.hpp"
#include "cherednik/laurent.hpp"
#include "cherednik/partition.hpp"
#include "cherednik/permutation.hpp"
#include "cherednik/qpolynomial.hpp"
#include "cherednik/qseries.hpp"
#include "cherednik/rat_algebra.hpp"
#include "cherednik/rational.hpp"
#include "cherednik/tableau.hpp"
#include "cherednik/trig_algebra.hpp"
#include "cherednik/verify.hpp"
#include "cherednik/verlinde.hpp"
