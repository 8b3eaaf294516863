#pragma once

#include "surjvcsp/errors.hpp"
#include "surjvcsp/value.hpp"
#include "surjvcsp/relation.hpp"
#include "surjvcsp/boolean_ops.hpp"
#include "surjvcsp/instance.hpp"
#include "surjvcsp/named_relations.hpp"
#include "surjvcsp/classify.hpp"
#include "surjvcsp/vertex_set.hpp"
#include "surjvcsp/graph.hpp"
#include "surjvcsp/mincut.hpp"
#include "surjvcsp/set_function.hpp"
#include "surjvcsp/gmc.hpp"
#include "surjvcsp/result.hpp"
#include "surjvcsp/oracle.hpp"
#include "surjvcsp/edsapprox.hpp"
#include "surjvcsp/solver.hpp"
#include "surjvcsp/gadgets.hpp"
#include "surjvcsp/io.hpp"
