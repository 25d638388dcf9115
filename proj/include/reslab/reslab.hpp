#pragma once

#include "reslab/degseq.hpp"
#include "reslab/enumerate.hpp"
#include "reslab/errors.hpp"
#include "reslab/graph.hpp"
#include "reslab/graph6.hpp"
#include "reslab/heuristics.hpp"
#include "reslab/independence.hpp"
#include "reslab/patterns.hpp"
#include "reslab/verify.hpp"
#include "reslab/version.hpp"
