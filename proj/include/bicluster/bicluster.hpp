#ifndef BICLUSTER_BICLUSTER_HPP
#define BICLUSTER_BICLUSTER_HPP

#include "bicluster/branch_analysis.hpp"
#include "bicluster/edit_enum.hpp"
#include "bicluster/graph.hpp"
#include "bicluster/io.hpp"
#include "bicluster/solver.hpp"
#include "bicluster/structure.hpp"

#endif  // BICLUSTER_BICLUSTER_HPP
