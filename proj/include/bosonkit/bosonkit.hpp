#pragma once

#include <bosonkit/bessel.hpp>
#include <bosonkit/dobinski.hpp>
#include <bosonkit/error.hpp>
#include <bosonkit/error_bounded_real.hpp>
#include <bosonkit/formal_series.hpp>
#include <bosonkit/genfunc.hpp>
#include <bosonkit/measures.hpp>
#include <bosonkit/monomial.hpp>
#include <bosonkit/normal_form.hpp>
#include <bosonkit/numeric.hpp>
#include <bosonkit/series.hpp>
#include <bosonkit/stirling.hpp>
#include <bosonkit/verify.hpp>
