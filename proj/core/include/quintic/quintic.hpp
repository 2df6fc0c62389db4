#pragma once

#include "quintic/closed_form.hpp"
#include "quintic/errors.hpp"
#include "quintic/hypergeom.hpp"
#include "quintic/poly_core.hpp"
#include "quintic/resolvent.hpp"
#include "quintic/rootfinder.hpp"
#include "quintic/splitter.hpp"
#include "quintic/verify.hpp"
