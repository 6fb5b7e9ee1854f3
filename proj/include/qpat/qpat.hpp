#pragma once

#include "qpat/algorithms.hpp"
#include "qpat/amplification.hpp"
#include "qpat/boolean_function.hpp"
#include "qpat/catalog.hpp"
#include "qpat/circuit.hpp"
#include "qpat/config.hpp"
#include "qpat/errors.hpp"
#include "qpat/gate.hpp"
#include "qpat/gf2.hpp"
#include "qpat/good_set.hpp"
#include "qpat/layout.hpp"
#include "qpat/oracle.hpp"
#include "qpat/patterns.hpp"
#include "qpat/qasm.hpp"
#include "qpat/rng.hpp"
#include "qpat/simulator.hpp"
#include "qpat/state_vector.hpp"
