//! Dehn quandles of groups and surfaces.
//!
//! Finite groups and quandles, constructions of quandles from groups,
//! homological quandles of closed surfaces, free and free involutory quandle
//! normal forms, a completion engine for involutory quandle presentations,
//! and knot colorings.

pub mod groups;
pub mod homsym;
pub mod knots;
pub mod completion;
pub mod constructions;
pub mod freeq;
pub mod quandles;
