#pragma once

#include "wrp/error.hpp"
#include "wrp/numeric.hpp"
#include "wrp/geometry.hpp"
#include "wrp/exact_paths.hpp"
#include "wrp/query.hpp"
#include "wrp/oracle.hpp"
#include "wrp/validation.hpp"
#include "wrp/spm.hpp"
#include "wrp/modpoly.hpp"
#include "wrp/acmq_cert.hpp"
#include "wrp/serialize.hpp"
