#pragma once

#include "qpbw/element.hpp"
#include "qpbw/generators.hpp"

namespace qpbw {

// Structural slot operations on tensor-power elements.  Slots are numbered
// from zero; every operation validates its slot argument and throws
// std::domain_error on a bad index.

// Inserts an empty slot (monomial 1, no quadratic terms) at position pos,
// shifting slots pos..nslots-1 up by one.  pos may equal e.nslots to append.
Element insert_slot(const Element& e, int pos);

// Swaps slots s and s+1, including their appearances in quadratic prefactors.
Element swap_slots(const Element& e, int s);

// Multiplies slot s by slot s+1 inside each term, straightening the product,
// and merges the two slots into one.  Quadratic prefactors identify the two
// slots' H variables.
Element mul_slots(const Element& e, int s);

// Coproduct applied to slot s: the result has one more slot, with slot s
// replaced by slots s and s+1 carrying the image.  H variables map to the
// sum of their two copies; products of generator images are straightened.
Element coproduct_slot(const Element& e, int s);

// Coproduct of a single-slot element.
Element coproduct(const Element& e);

// Counit applied to slot s: terms with x or y letters in that slot vanish,
// k powers and H variables in that slot are sent to one and zero, and the
// slot is removed.  Requires e.nslots >= 2; use counit for one slot.
Element counit_slot(const Element& e, int s);

// Counit of a single-slot element, as a scalar.
QScalar counit(const Element& e);

// Antipode applied to slot s: the slot's monomial is reversed letterwise
// with x_i -> -q x_i, y_i -> -qbar y_i, k^c -> k^{-c}, interval letters
// expanded into simple letters first, and the result re-straightened.
// Quadratic terms with exactly one H variable in slot s flip sign.
Element antipode_slot(const Element& e, int s);

// Antipode of a single-slot element.
Element antipode(const Element& e);

}  // namespace qpbw
