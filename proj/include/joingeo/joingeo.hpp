#pragma once

#include "joingeo/axioms.hpp"
#include "joingeo/check_report.hpp"
#include "joingeo/closure.hpp"
#include "joingeo/enumerate.hpp"
#include "joingeo/generators.hpp"
#include "joingeo/io.hpp"
#include "joingeo/join_space.hpp"
#include "joingeo/line_space.hpp"
#include "joingeo/matroid.hpp"
#include "joingeo/point_set.hpp"
