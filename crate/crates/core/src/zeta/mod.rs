//! Evaluation of the Riemann-Siegel theta function and `Z(t)` on the
//! critical line, plus the frozen-phase spectral decomposition of `Z` used as
//! a structural diagnostic.

mod rs_tables;
mod spectral;
mod theta;
mod zfun;

pub use spectral::{spectral_window, spectral_z, Oscillator, SpectralWindow};
pub use theta::theta;
pub use zfun::{z, z_value_any, Method, ZSample, T_CROSSOVER};

