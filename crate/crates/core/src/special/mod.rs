//! Reference evaluators: Lambert W, Bernoulli numbers, Riemann/Hurwitz/Lerch
//! zeta by Euler–Maclaurin summation, and the named constants that enter the
//! bounds.

mod bernoulli;
mod constants;
mod lambert;
mod lerch;
mod zeta;

pub use bernoulli::{bernoulli_2k, BERNOULLI_TERMS};
pub use constants::{
    c0, kappa_constants, riemann_asymptotic_target, KappaConstants, CLASSICAL_SEPARATION, EULER_GAMMA,
    KAPPA_ALT_PRINTED, KAPPA_PRINTED,
};
pub use lambert::lambert_w0;
pub use lerch::{lerch_phi, lerch_phi_with};
pub use zeta::{hurwitz_zeta, hurwitz_zeta_with, riemann_zeta, riemann_zeta_with, ZetaEvalConfig, ZetaValue};
