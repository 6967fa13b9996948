// Copyright 2026 The smt Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <smt/charpoly.hpp>
#include <smt/enumerate.hpp>
#include <smt/error.hpp>
#include <smt/families.hpp>
#include <smt/graph.hpp>
#include <smt/graph6.hpp>
#include <smt/invariants.hpp>
#include <smt/matching.hpp>
#include <smt/rational.hpp>
#include <smt/report_io.hpp>
#include <smt/scan.hpp>
#include <smt/spectral.hpp>
#include <smt/theorems.hpp>
