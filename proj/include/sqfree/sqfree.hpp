#pragma once

#include "acceptance.hpp"
#include "betti.hpp"
#include "bits.hpp"
#include "caterpillar.hpp"
#include "chain.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "families.hpp"
#include "ideal.hpp"
#include "json_io.hpp"
#include "lemmas.hpp"
#include "linalg.hpp"
#include "linearity.hpp"
#include "matching.hpp"
#include "monomial.hpp"
#include "ncomplex.hpp"
#include "order_checks.hpp"
#include "orders.hpp"
#include "report.hpp"
#include "taylor.hpp"
#include "tree.hpp"
