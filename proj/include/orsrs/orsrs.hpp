#pragma once

#include "core.hpp"
#include "verify.hpp"
#include "layers.hpp"
#include "tensor.hpp"
#include "shrink.hpp"
#include "generate.hpp"
#include "oracle.hpp"
