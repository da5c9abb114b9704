//! Reciprocal gamma function and the cancellation-free difference `G(a,b)`.

mod gfun;
mod recip;
mod table;

pub use gfun::{g_eval, g_quadrature, g_series, g_shift, gamma_eps, QuadratureSpec};
pub use recip::{gamma_fn, recip_gamma};
pub use table::{
    generate_ck, generate_ck_with_zeta, riemann_zeta, GeneratedCoefficients, ReciprocalGammaTable, TableSource,
    EULER_GAMMA, RGAMMA_COEFFS,
};
