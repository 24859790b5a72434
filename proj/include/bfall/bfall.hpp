#pragma once

#include <bfall/claims.hpp>
#include <bfall/coloring.hpp>
#include <bfall/constructions.hpp>
#include <bfall/corpus.hpp>
#include <bfall/errors.hpp>
#include <bfall/graph.hpp>
#include <bfall/homomorphism.hpp>
#include <bfall/io.hpp>
#include <bfall/product.hpp>
#include <bfall/search.hpp>
#include <bfall/spectra.hpp>
#include <bfall/structure.hpp>
