#pragma once

// Umbrella header for the library. The command-line front end (bdes/cli.hpp)
// additionally needs CLI11.hpp and json.hpp on the include path.

#include "bdes/error.hpp"
#include "bdes/permutation.hpp"
#include "bdes/paths.hpp"
#include "bdes/bijections.hpp"
#include "bdes/multipoly.hpp"
#include "bdes/series.hpp"
#include "bdes/genfun.hpp"
#include "bdes/symfunc.hpp"
#include "bdes/conjectures.hpp"
#include "bdes/verify.hpp"
