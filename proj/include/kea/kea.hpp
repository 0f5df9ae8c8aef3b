#pragma once

// Keyphrase extraction: candidate phrase generation, TF-IDF and
// first-occurrence features, supervised MDL discretization, Naive Bayes
// scoring, ranked extraction and evaluation.

#include "kea/bayes.hpp"
#include "kea/candidates.hpp"
#include "kea/df_model.hpp"
#include "kea/discretize.hpp"
#include "kea/evaluate.hpp"
#include "kea/extract.hpp"
#include "kea/features.hpp"
#include "kea/fixtures.hpp"
#include "kea/lovins.hpp"
#include "kea/stopwords.hpp"
#include "kea/text.hpp"
