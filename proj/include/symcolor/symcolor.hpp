#pragma once

#include "symcolor/automorphism.hpp"
#include "symcolor/coloring.hpp"
#include "symcolor/compactness.hpp"
#include "symcolor/corpus.hpp"
#include "symcolor/error.hpp"
#include "symcolor/gadgets.hpp"
#include "symcolor/generator.hpp"
#include "symcolor/graph.hpp"
#include "symcolor/io.hpp"
#include "symcolor/kpw.hpp"
#include "symcolor/list_distinguishing.hpp"
#include "symcolor/parameter.hpp"
#include "symcolor/recolor.hpp"
#include "symcolor/solver.hpp"
#include "symcolor/verify.hpp"
