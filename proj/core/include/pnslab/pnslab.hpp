#pragma once

#include "pnslab/analysis.hpp"
#include "pnslab/audit.hpp"
#include "pnslab/classify.hpp"
#include "pnslab/corpus.hpp"
#include "pnslab/inverse.hpp"
#include "pnslab/lab.hpp"
#include "pnslab/report.hpp"
#include "pnslab/ring.hpp"
