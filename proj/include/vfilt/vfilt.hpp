#pragma once

// Umbrella header: pulls in the whole public interface of the library.

#include <vfilt/error.hpp>
#include <vfilt/filtration.hpp>
#include <vfilt/graph.hpp>
#include <vfilt/ideal.hpp>
#include <vfilt/json_io.hpp>
#include <vfilt/monomial.hpp>
#include <vfilt/newton.hpp>
#include <vfilt/numbers.hpp>
#include <vfilt/parallel.hpp>
#include <vfilt/parse.hpp>
#include <vfilt/prime.hpp>
#include <vfilt/ring.hpp>
#include <vfilt/series.hpp>
#include <vfilt/verify.hpp>
#include <vfilt/vnumber.hpp>
