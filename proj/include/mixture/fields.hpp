#pragma once

#include <functional>

#include "fd.hpp"
#include "linalg.hpp"
#include "mixture_tensor.hpp"
#include "multivector.hpp"

namespace mixture {

// fields are evaluation callbacks, sampled on demand by the FD stencils;
// nothing is stored on a grid
using ScalarField = std::function<double(const Point4&)>;
using CplxField = std::function<cplx(const Point4&)>;
using MVField = std::function<MultiVector(const Point4&)>;
// frame matrix L^{a'}_a as [row a'][col a]: column a holds the components of
// the transformed basis element e_a in the constant reference basis
using FrameField = std::function<Mat4(const Point4&)>;
using MetricField = std::function<Mat4(const Point4&)>;
// connection entries as [g][a][b] = coefficient of e_g in the b-derivative
// of e_a (b is always the derivative slot)
using ConnectionField = std::function<Tensor3(const Point4&)>;
using Tensor3Field = std::function<Tensor3(const Point4&)>;

} // namespace mixture
