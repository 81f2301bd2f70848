#pragma once

#include "pdfa/automaton.hpp"
#include "pdfa/characteristic.hpp"
#include "pdfa/closure.hpp"
#include "pdfa/equivalence.hpp"
#include "pdfa/error.hpp"
#include "pdfa/experiment.hpp"
#include "pdfa/generate.hpp"
#include "pdfa/io.hpp"
#include "pdfa/learner.hpp"
#include "pdfa/oracle.hpp"
#include "pdfa/order.hpp"
#include "pdfa/partition.hpp"
#include "pdfa/prefix_tree.hpp"
#include "pdfa/sample.hpp"
#include "pdfa/word.hpp"
