#pragma once

// Umbrella header.

#include "complexity.hpp"
#include "equiv.hpp"
#include "errors.hpp"
#include "gen.hpp"
#include "interp.hpp"
#include "proof.hpp"
#include "rewrite.hpp"
#include "schemes.hpp"
#include "surface.hpp"
#include "term.hpp"
