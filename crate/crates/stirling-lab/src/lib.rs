//! Exact computation of the signed Stirling numbers of the first kind by
//! many independent routes, partial Bell polynomial evaluation, and a
//! machine-checked audit of the identities connecting them.
//!
//! Everything is computed over arbitrary-precision integers and exact
//! rationals; there is no floating point anywhere. The triangular
//! recurrence is the oracle, and every other strategy and every identity
//! is judged against it. One catalogued identity variant
//! ([`verify::IdentityId::Vf7Printed`]) is expected to disagree with the
//! oracle; documenting that disagreement, and the parity pattern it
//! follows, is part of the point.

pub mod bell;
pub mod exact;
pub mod series;
pub mod strategies;
pub mod table;
pub mod verify;
