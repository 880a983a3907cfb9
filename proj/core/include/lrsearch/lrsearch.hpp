#pragma once

#include "lrsearch/error.hpp"
#include "lrsearch/filters.hpp"
#include "lrsearch/instance.hpp"
#include "lrsearch/lr_stack.hpp"
#include "lrsearch/oracle.hpp"
#include "lrsearch/profile.hpp"
#include "lrsearch/search.hpp"
