#pragma once

#include "bihalve/generate.hpp"
#include "bihalve/genome.hpp"
#include "bihalve/intervals.hpp"
#include "bihalve/io.hpp"
#include "bihalve/natural_graph.hpp"
#include "bihalve/oracle.hpp"
#include "bihalve/rearrangement.hpp"
#include "bihalve/reduction.hpp"
#include "bihalve/scenario.hpp"
#include "bihalve/solver.hpp"
