#pragma once

#include "goldbach_lab/audit.hpp"
#include "goldbach_lab/census.hpp"
#include "goldbach_lab/checkpoint.hpp"
#include "goldbach_lab/dc.hpp"
#include "goldbach_lab/error.hpp"
#include "goldbach_lab/parallel.hpp"
#include "goldbach_lab/primes.hpp"
#include "goldbach_lab/report.hpp"
#include "goldbach_lab/rowrange.hpp"
#include "goldbach_lab/sweep.hpp"
