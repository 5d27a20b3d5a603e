#pragma once

#include "qcomb/carlitz.hpp"
#include "qcomb/certified.hpp"
#include "qcomb/cigl.hpp"
#include "qcomb/errors.hpp"
#include "qcomb/inv_calibration.hpp"
#include "qcomb/partition_oracle.hpp"
#include "qcomb/psi.hpp"
#include "qcomb/qcore.hpp"
#include "qcomb/qpoisson.hpp"
#include "qcomb/qpoly.hpp"
#include "qcomb/qrational_function.hpp"
#include "qcomb/rational.hpp"
#include "qcomb/truncated_series.hpp"
#include "qcomb/verdict.hpp"
