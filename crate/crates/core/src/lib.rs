//! Interval-closed sets of chain products, truncated rectangles and root posets.
//!
//! The crate is organised around four modules:
//!
//! * [`poset`] builds the posets, tests interval-closedness and enumerates
//!   interval-closed sets by brute force;
//! * [`paths`] holds bicolored Motzkin words, quarter-plane walks and nested
//!   path pairs together with their validators, statistics and enumerators;
//! * [`bijections`] maps interval-closed sets to and from those paths;
//! * [`series`] computes the counting sequences from closed-form generating
//!   functions and functional-equation recurrences over exact rationals.

pub mod poset;
pub mod paths;
pub mod bijections;
pub mod series;
