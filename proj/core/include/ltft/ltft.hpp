#pragma once
// Umbrella header for the core library.

#include "ltft/atom.hpp"
#include "ltft/baselines.hpp"
#include "ltft/csv.hpp"
#include "ltft/error.hpp"
#include "ltft/frame_op.hpp"
#include "ltft/lds.hpp"
#include "ltft/parallel.hpp"
#include "ltft/params.hpp"
#include "ltft/phase_space.hpp"
#include "ltft/processing.hpp"
#include "ltft/signal.hpp"
#include "ltft/transform.hpp"
#include "ltft/window.hpp"
