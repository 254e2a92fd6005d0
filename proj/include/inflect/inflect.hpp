#pragma once

#include "inflect/biform.hpp"
#include "inflect/chow.hpp"
#include "inflect/cluster.hpp"
#include "inflect/curve.hpp"
#include "inflect/error.hpp"
#include "inflect/family.hpp"
#include "inflect/instance.hpp"
#include "inflect/jet.hpp"
#include "inflect/linalg.hpp"
#include "inflect/local_multiplicity.hpp"
#include "inflect/mpoly.hpp"
#include "inflect/parse.hpp"
#include "inflect/pullback.hpp"
#include "inflect/random.hpp"
#include "inflect/rational.hpp"
#include "inflect/report.hpp"
#include "inflect/resultant.hpp"
#include "inflect/roots.hpp"
#include "inflect/runner.hpp"
#include "inflect/selftest.hpp"
#include "inflect/solver.hpp"
#include "inflect/unipoly.hpp"
