#pragma once

// Umbrella header for the hayd library.

#include "hayd/field.hpp"
#include "hayd/tensor.hpp"
#include "hayd/linalg.hpp"
#include "hayd/report.hpp"
#include "hayd/algebra.hpp"
#include "hayd/hopf.hpp"
#include "hayd/builtin.hpp"
#include "hayd/rep.hpp"
#include "hayd/ayd.hpp"
#include "hayd/galois.hpp"
#include "hayd/double.hpp"
#include "hayd/io.hpp"
#include "hayd/suite.hpp"
