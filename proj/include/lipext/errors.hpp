#pragma once

#include <stdexcept>
#include <string>

namespace lipext {

// Base class for all toolkit errors. Subclasses name the contract that was
// violated so callers can react (and tests can assert) per failure kind.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- distance matrix validation -------------------------------------------
struct NonSquareMatrix : Error { using Error::Error; };
struct NegativeDistance : Error { using Error::Error; };
struct AsymmetricMatrix : Error { using Error::Error; };
struct NonzeroDiagonal : Error { using Error::Error; };
struct NonFiniteValue : Error { using Error::Error; };
struct NotAMetric : Error { using Error::Error; };

// -- space construction ----------------------------------------------------
struct DimensionMismatch : Error { using Error::Error; };
struct DuplicatePoint : Error { using Error::Error; };
struct DisconnectedGraph : Error { using Error::Error; };
struct NonpositiveWeight : Error { using Error::Error; };
struct PointOnOrOutsideBoundary : Error { using Error::Error; };
struct EmptySpace : Error { using Error::Error; };
struct InvalidP : Error { using Error::Error; };

// -- nets ------------------------------------------------------------------
struct SeedsTooClose : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// -- extension -------------------------------------------------------------
struct CTooSmall : Error { using Error::Error; };
struct EmptySubset : Error { using Error::Error; };

// -- approximation ---------------------------------------------------------
struct StarViolated : Error { using Error::Error; };
struct NonpositiveInput : Error { using Error::Error; };

// -- files and CLI ---------------------------------------------------------
struct ParseError : Error { using Error::Error; };
struct InvalidKind : Error { using Error::Error; };
struct BadParameters : Error { using Error::Error; };

} // namespace lipext
