#pragma once

#include "tilegap/core.hpp"
#include "tilegap/matching.hpp"
#include "tilegap/graph.hpp"
#include "tilegap/sat.hpp"
#include "tilegap/puzzle.hpp"
#include "tilegap/red_ham.hpp"
#include "tilegap/red_vdpc.hpp"
#include "tilegap/red_sat.hpp"
#include "tilegap/io.hpp"
#include "tilegap/gen.hpp"
