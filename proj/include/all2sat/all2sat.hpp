#pragma once

#include "all2sat/bitvec.hpp"
#include "all2sat/literal.hpp"
#include "all2sat/cnf.hpp"
#include "all2sat/dimacs.hpp"
#include "all2sat/implication_graph.hpp"
#include "all2sat/poset.hpp"
#include "all2sat/row.hpp"
#include "all2sat/enumerator.hpp"
#include "all2sat/compressed.hpp"
#include "all2sat/horn.hpp"
#include "all2sat/random_cnf.hpp"
#include "all2sat/brute_force.hpp"
#include "all2sat/experiment.hpp"
