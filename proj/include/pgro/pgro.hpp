#ifndef PGRO_PGRO_HPP
#define PGRO_PGRO_HPP

#include "algebra.hpp"
#include "corpus.hpp"
#include "errors.hpp"
#include "experiment.hpp"
#include "fp_linalg.hpp"
#include "grobner.hpp"
#include "group.hpp"
#include "group_file.hpp"
#include "jennings.hpp"
#include "nontips.hpp"
#include "ordering.hpp"
#include "permutation.hpp"
#include "pipeline.hpp"
#include "random.hpp"
#include "report.hpp"

#endif  // PGRO_PGRO_HPP
