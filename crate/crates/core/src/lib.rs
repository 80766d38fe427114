//! Machine checks for the quantum Teichmüller representation of the decorated
//! Ptolemy groupoid.
//!
//! * [`surface`] models decorated ideal triangulations and the moves
//!   `σ`, `ρ_i`, `ω_ij`.
//! * [`opalgebra`] holds operator words `ζ^k · T-letters · P`.
//! * [`rewrite`] is the rule kernel, the script checker and the search.
//! * [`quantize`] maps groupoid words to operator words and computes lifts of
//!   mapping class group relations.
//! * [`cohomology`] does the extension-class arithmetic.

pub mod cli;
pub mod cohomology;
pub mod opalgebra;
pub mod quantize;
pub mod rewrite;
pub mod surface;
