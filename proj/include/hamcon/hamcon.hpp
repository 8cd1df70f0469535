#pragma once

#include "hamcon/binomial.hpp"
#include "hamcon/bounds.hpp"
#include "hamcon/canonical.hpp"
#include "hamcon/cliques.hpp"
#include "hamcon/connectivity.hpp"
#include "hamcon/constructions.hpp"
#include "hamcon/error.hpp"
#include "hamcon/graph.hpp"
#include "hamcon/graph6.hpp"
#include "hamcon/oracle.hpp"
#include "hamcon/sufficiency.hpp"
#include "hamcon/transforms.hpp"
#include "hamcon/verify.hpp"
