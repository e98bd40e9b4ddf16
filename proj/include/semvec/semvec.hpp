#pragma once

#include "semvec/compositional_fixture.hpp"
#include "semvec/concept_algebra.hpp"
#include "semvec/cooccurrence_trainer.hpp"
#include "semvec/embedding_store.hpp"
#include "semvec/errors.hpp"
#include "semvec/hypervector.hpp"
#include "semvec/paraphrase.hpp"
#include "semvec/retrofitter.hpp"
#include "semvec/similarity_index.hpp"
