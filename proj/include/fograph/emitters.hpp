#pragma once

#include "fograph/formula.hpp"
#include "fograph/graph.hpp"

namespace fograph {

enum class DeltaStyle { naive, halving, three_var };

// Sentence of depth v(G)+1 true exactly on graphs isomorphic to G: lists n
// distinct vertices with their adjacencies and forbids an (n+1)-st vertex.
FormulaRef generic_defining(FormulaStore& store, const Graph& g);

// dist(x,y) <= n, with free variables x and y. The naive style chains n-1
// existentials (D = n-1, W = n+1); halving splits the distance (D =
// ceil(log2 n)); three_var additionally recycles a fixed pool {x,y,z}
// (W = 3). n = 0 yields x=y.
FormulaRef delta(FormulaStore& store, int n,
                 DeltaStyle style = DeltaStyle::naive);

// Defines the path on n >= 2 vertices: diameter equals n-1, maximum degree
// at most 2, and some vertex of degree at most 1.
FormulaRef path_sentence(FormulaStore& store, int n,
                         DeltaStyle style = DeltaStyle::naive);

// Depth-k sentence defining the class of graphs indistinguishable from G by
// sentences of quantifier depth k. Resource caps: v(G) <= 6, 1 <= k <= 4.
FormulaRef hintikka(FormulaStore& store, const Graph& g, int k);

// Depth-k sentence expressing the (k-1)-extension property, k >= 2.
FormulaRef extension_sentence(FormulaStore& store, int k);

// Defining sentence for the padded graph built from a defining sentence for
// the base graph; D(result) = max(D(phi), 4) + 1.
FormulaRef padding_sentence(FormulaStore& store, FormulaRef phi);

}  // namespace fograph
