//! Hamiltonian `(s,t)`-paths in rectangular, L-shaped and C-shaped grid graphs.

pub mod acceptability;
pub mod construct;
pub mod grid;
pub mod oracle;
pub mod region;
pub mod stitch;
