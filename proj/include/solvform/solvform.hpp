#pragma once

#include <solvform/catalog.hpp>
#include <solvform/characters.hpp>
#include <solvform/errors.hpp>
#include <solvform/group_action.hpp>
#include <solvform/hodge.hpp>
#include <solvform/json_io.hpp>
#include <solvform/lie_algebra.hpp>
#include <solvform/linalg.hpp>
#include <solvform/metric_frame.hpp>
#include <solvform/multivector.hpp>
#include <solvform/scalar.hpp>
