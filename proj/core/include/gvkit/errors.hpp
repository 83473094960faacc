#pragma once

#include <stdexcept>
#include <string>

namespace gvkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Variable contexts disagree (same name, different kind/floor). */
struct ContextError : Error {
    using Error::Error;
};

/* Exponent bounds, bad substitution values, out-of-range coefficient
 * extraction and similar series-level misuse. */
struct SeriesError : Error {
    using Error::Error;
};

/* invert_unit called on a series whose lowest part is not a monomial. */
struct NonUnitError : Error {
    using Error::Error;
};

/* Character decomposition fed an input not fixed by t -> 1/t. */
struct SymmetryError : Error {
    using Error::Error;
};

/* cg_decompose produced a negative multiplicity without allow_virtual. */
struct VirtualError : Error {
    using Error::Error;
};

/* gw_to_gv peeled a non-integer n_h: the GW input is inconsistent. */
struct InversionError : Error {
    using Error::Error;
};

/* Malformed JSON input for the CLI file formats. */
struct SchemaError : Error {
    using Error::Error;
};

/* Cover data violates downward closure or references unknown vertices. */
struct NerveError : Error {
    using Error::Error;
};

}  // namespace gvkit
