#pragma once

#include "certify.hpp"
#include "digits.hpp"
#include "fpt.hpp"
#include "number_theory.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "sweep.hpp"
