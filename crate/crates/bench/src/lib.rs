//! Fixed instances shared by the benchmarks.

use linsys_core::constructions::{build_cnn, projective_plane};
use linsys_core::LinearSystem;

/// `C_{n,n+1}` for odd `n`.
pub fn cnn(n: usize) -> LinearSystem {
    build_cnn(n).expect("odd n").0
}

pub fn plane(q: usize) -> LinearSystem {
    projective_plane(q).expect("prime q").0
}
