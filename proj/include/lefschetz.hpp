#pragma once

#include "lefschetz/error.hpp"
#include "lefschetz/core_model.hpp"
#include "lefschetz/homology.hpp"
#include "lefschetz/braid_word.hpp"
#include "lefschetz/mcg.hpp"
#include "lefschetz/lift.hpp"
#include "lefschetz/invariants.hpp"
#include "lefschetz/sixfold.hpp"
#include "lefschetz/delpezzo.hpp"
#include "lefschetz/constructions.hpp"
#include "lefschetz/spec_io.hpp"
#include "lefschetz/analysis.hpp"
#include "lefschetz/report.hpp"
