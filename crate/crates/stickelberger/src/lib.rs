//! Exact arithmetic for Stickelberger elements and their consequences.
//!
//! Everything here is computed over `Q` or `Z/l^k` with arbitrary-precision
//! integers; there is no floating point anywhere. The crate is organized in
//! layers:
//!
//! * [`arith`] — rational, modular and `l`-adic kernels: Bernoulli numbers,
//!   Teichmüller lifts, Hensel lifting, valuations.
//! * [`groupring`] — abelian Galois groups as quotients of `(Z/m)^*` and the
//!   group-ring algebra over them: products, restriction, twists, characters,
//!   idempotents, annihilator decompositions.
//! * [`theta`] — partial zeta values at non-positive integers and the higher
//!   Stickelberger elements, with integrality, congruence and minus-part
//!   checks.
//! * [`cyclotomic`] — exact arithmetic in `Z[zeta_m]`, Jacobi sums, the
//!   Jacobi-sum realization of Brumer–Stark elements, finite divisors and
//!   norm relations.
//! * [`kshadow`] — orders of K-groups of finite fields, `w_n` invariants,
//!   induced modules and the boundary-exponent and restriction identities.
//! * [`iwasawa`] — eigenspace orders, auxiliary prime search, power-class
//!   certification and the cyclicity probe.
//!
//! A quick taste:
//!
//! ```
//! use stickelberger::arith::rat_int;
//! use stickelberger::theta::theta;
//! use stickelberger::groupring::AbelianGaloisGroup;
//!
//! let g = AbelianGaloisGroup::full(5).unwrap();
//! // Theta_0(b = 3, f' = 5) over Q(mu_5) is sigma_3 - sigma_2.
//! let t = theta(0, 3, 3, 5, &g).unwrap();
//! assert_eq!(t.element.rat_coeff(3), rat_int(1));
//! assert_eq!(t.element.rat_coeff(2), rat_int(-1));
//! ```

pub mod arith;
pub mod cache;
pub mod cyclotomic;
pub mod groupring;
pub mod iwasawa;
pub mod kshadow;
pub mod theta;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

// The guide's code blocks double as doc tests, so the book can never drift
// from the API. One module per chapter keeps failures attributable.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/stickelberger-elements.md")]
    mod stickelberger_elements {}
    #[doc = include_str!("../../../book/src/congruences.md")]
    mod congruences {}
    #[doc = include_str!("../../../book/src/jacobi-sums.md")]
    mod jacobi_sums {}
    #[doc = include_str!("../../../book/src/euler-systems.md")]
    mod euler_systems {}
    #[doc = include_str!("../../../book/src/k-theory-orders.md")]
    mod k_theory_orders {}
    #[doc = include_str!("../../../book/src/iwasawa-cyclicity.md")]
    mod iwasawa_cyclicity {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
