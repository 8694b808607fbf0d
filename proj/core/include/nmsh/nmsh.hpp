#pragma once

#include "nmsh/chain_complex.hpp"
#include "nmsh/flow_complex.hpp"
#include "nmsh/integer_matrix.hpp"
#include "nmsh/parse_error.hpp"
#include "nmsh/seifert.hpp"
#include "nmsh/smith.hpp"
