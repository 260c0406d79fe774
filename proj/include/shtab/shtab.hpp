#pragma once

// Umbrella header.

#include "errors.hpp"
#include "word.hpp"
#include "tableau.hpp"
#include "walk.hpp"
#include "operators.hpp"
#include "jdt.hpp"
#include "graph.hpp"
#include "strings.hpp"
#include "qpoly.hpp"
#include "crystal.hpp"
#include "export.hpp"
#include "axioms.hpp"
