//! Combinatorial algebra for equivariant vector bundles on isotropic
//! Grassmannians `IGr(k, 2n)` and odd isotropic Grassmannians `IGr(k, 2n+1)`.
//!
//! Everything here is exact integer arithmetic. The crate is `no_std` and only
//! needs `alloc`; IO, the command line and file formats live in the `igr`
//! crate.
//!
//! Module map:
//!
//! * [`weights`]: `GL_k` and `Sp_2n` dominant weights, twisted Schur bundles.
//! * [`schur`]: Pieri rules, Littlewood–Richardson, Weyl dimension for `GL_k`.
//! * [`bbw`]: Borel–Bott–Weil on the even isotropic Grassmannian.
//! * [`oddcoh`]: cohomology on the odd isotropic Grassmannian via the Koszul
//!   spectral sequence.
//! * [`ext`]: Ext-groups, exceptional/Lefschetz and semiorthogonality checks.
//! * [`complexes`]: staircase complexes, truncations and Euler pairings.
//! * [`fullness`]: the generation closure engine over monomial bundles.
//! * [`invariants`]: dimension, index and Grothendieck group ranks.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bbw;
pub mod complexes;
pub mod error;
pub mod ext;
pub mod fullness;
pub mod invariants;
pub mod oddcoh;
pub mod schur;
pub mod weights;

pub use error::Error;
pub use weights::{GlWeight, SpWeight, TwistedBundle};

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
