#pragma once

#include <string>

#include "tileflip/experiments.hpp"
#include "tileflip/height.hpp"
#include "tileflip/region.hpp"
#include "tileflip/smallgraph.hpp"
#include "tileflip/tiling.hpp"

namespace tileflip {

// Region file format: {"kind": ..., "params": {...}, "cells": [[x,y],...]?}
std::string region_to_json(const Region& r);
RegionPtr region_from_json(const std::string& text);

// Spec strings: "rect:10x10", "torus:8", "stairhex:50,2,3".
RegionPtr parse_region_spec(const std::string& text);
// Accepts either a spec string or a path to a region JSON file.
RegionPtr load_region_arg(const std::string& arg);

// Tiling file format: region + tile sizes + the sorted {x,y,side} list.
std::string tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const std::string& text);

std::string heightfield_to_json(const HeightField& f);

// Graph schema: {"vertices": [...], "edges": [[i,j],...], "matrix": [["p/q",...]]?}
std::string graph_to_json(const TilingGraph& g, bool include_matrix);

std::string occupancy_to_json(const OccupancyMap& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tileflip
