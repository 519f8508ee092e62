#pragma once

#include "qfourier/fft.hpp"
#include "qfourier/group.hpp"
#include "qfourier/kernels.hpp"
#include "qfourier/qft.hpp"
#include "qfourier/quaternion.hpp"
#include "qfourier/random.hpp"
#include "qfourier/signal.hpp"
