#pragma once

// Umbrella header: exact eigenspace dimensions of the Milnor fiber
// monodromy for projective line arrangements with only double and triple
// points, reduced-pencil detection, and the catalog of classical
// examples.

#include "arrmono/arrangement.hpp"
#include "arrmono/arrfile.hpp"
#include "arrmono/catalog.hpp"
#include "arrmono/errors.hpp"
#include "arrmono/evaluation.hpp"
#include "arrmono/field.hpp"
#include "arrmono/matrix.hpp"
#include "arrmono/monodromy.hpp"
#include "arrmono/pencil.hpp"
#include "arrmono/polynomial.hpp"
#include "arrmono/projective.hpp"
#include "arrmono/rational.hpp"
#include "arrmono/report.hpp"
#include "arrmono/verify.hpp"
