#pragma once

#include "vmesh/clusters.hpp"
#include "vmesh/delaunay.hpp"
#include "vmesh/descriptors.hpp"
#include "vmesh/errors.hpp"
#include "vmesh/geometry.hpp"
#include "vmesh/ingestion.hpp"
#include "vmesh/json_io.hpp"
#include "vmesh/proximity.hpp"
#include "vmesh/svg.hpp"
#include "vmesh/tessellation.hpp"
