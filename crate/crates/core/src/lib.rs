//! Kodaira fiber census of Weierstrass elliptic surfaces over the projective
//! line, local oracles for the singular fibers, and Bott vanishing verdicts
//! for polarized elliptic surfaces.

pub mod cli;
pub mod criteria;
pub mod exactpoly;
pub mod families;
pub mod intersect;
pub mod linalg;
pub mod localgeom;
pub mod weierstrass;
