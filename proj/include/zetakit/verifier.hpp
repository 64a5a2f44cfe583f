#pragma once

#include "zetakit.hpp"
#include "verifier/identity.hpp"
#include "verifier/registry.hpp"
#include "verifier/run.hpp"
#include "verifier/compute.hpp"
