#pragma once

#include "fourier_eigen/bessel.hpp"
#include "fourier_eigen/constants.hpp"
#include "fourier_eigen/distribution.hpp"
#include "fourier_eigen/eigenfunctions.hpp"
#include "fourier_eigen/errors.hpp"
#include "fourier_eigen/expint.hpp"
#include "fourier_eigen/parallel.hpp"
#include "fourier_eigen/quadrature.hpp"
#include "fourier_eigen/radial_fourier.hpp"
#include "fourier_eigen/report.hpp"
#include "fourier_eigen/thermal_lens.hpp"
#include "fourier_eigen/verify.hpp"
